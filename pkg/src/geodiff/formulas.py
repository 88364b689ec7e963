"""Closed-form metric expressions on raw scalars.

Every function here accepts plain floats or DualScalar arguments and applies
no input validation; the typed wrappers in ``geom`` guard the domains. The
angle opposite the z-side (between the x- and y-sides) is always gamma, and
all bisector/median/cevian expressions act on that vertex / the z-side.
"""

from __future__ import annotations

import math

from .dual import DualScalar, acos, cos, sin, sqrt, value

PI = math.pi


def hypotenuse(x, y):
    """Hypotenuse of a right triangle with legs x and y."""
    return sqrt(x * x + y * y)


def median(x, y, z):
    """Median from the gamma vertex to the midpoint of the z-side."""
    return sqrt((x * x + y * y) / 2.0 - z * z / 4.0)


def cevian(x, y, m, n):
    """Cevian to the z-side, splitting it into m (x-adjacent) and n."""
    return sqrt((n * (x * x - m * m) + m * (y * y - n * n)) / (m + n))


def triangle_area(x, y, z):
    s = (x + y + z) / 2.0
    return sqrt(s * (s - x) * (s - y) * (s - z))


def angle_gamma(x, y, z):
    """Angle between the x- and y-sides (opposite z), in (0, pi)."""
    return acos((x * x + y * y - z * z) / (2.0 * x * y))


def bisector_full(x, y, z):
    """Internal bisector of gamma, vertex to its foot on the z-side."""
    w = z / (x + y)
    return sqrt(x * y * (1.0 - w * w))


def bisector_to_incenter(x, y, z):
    """Distance from the gamma vertex to the incenter along the bisector."""
    return sqrt(x * y * (x + y - z) / (x + y + z))


def trirect_face_area(x, y, z):
    """Area of the face opposite the right corner of a trirectangular tetrahedron."""
    return sqrt((x * y / 2.0) ** 2 + (x * z / 2.0) ** 2 + (y * z / 2.0) ** 2)


def inscribed_angle(theta):
    """Inscribed angle subtending the arc of central angle theta."""
    return theta / 2.0


def circumradius(x, y, z):
    return x * y * z / sqrt((x + y + z) * (-x + y + z) * (x - y + z) * (x + y - z))


def inradius(x, y, z):
    return sqrt((-x + y + z) * (x - y + z) * (x + y - z) / (4.0 * (x + y + z)))


def euler_distance(r, big_r):
    """Distance between incenter and circumcenter from the two radii."""
    return sqrt(big_r * (big_r - 2.0 * r))


def third_side(x, beta, gamma):
    """Side opposite beta, given the x-side and its two adjacent angles."""
    return x * sin(beta) / sin(beta + gamma)


def ptolemy_diagonal(x, y, u, v):
    """Diagonal joining the (v,x) and (y,u) vertices of a cyclic quadrilateral."""
    return sqrt((u * x + v * y) * (v * x + u * y) / (u * v + x * y))


def cyclic_quad_area(x, y, u, v):
    s = (x + y + u + v) / 2.0
    return sqrt((s - x) * (s - y) * (s - u) * (s - v))


def circle_area(r):
    return PI * r * r


def sphere_volume(r):
    return 4.0 * PI * r ** 3 / 3.0


# --- inverse bisector problem -------------------------------------------------
#
# Squaring sqrt(((a+b)^2 - z^2)(z^2 - (a-b)^2)) = c/(a b) * z (z^2 - a^2 - b^2)
# gives a cubic in w = z^2.  The positive sign of the 1/(ab) constant is the
# geometric branch (the negative one would force c < 0 on the admissible
# interval); verified by forward evaluation on equilateral and right triangles.


def bisector_cubic_coeffs(a, b, c):
    """Monic cubic w^3 + p w^2 + q w + r in w = z^2 for the side opposite c."""
    a2, b2, c2 = a * a, b * b, c * c
    s2 = a2 + b2
    p = (a2 * b2 - 2.0 * c2 * s2) / c2
    q = (c2 * s2 * s2 - 2.0 * a2 * b2 * s2) / c2
    r = a2 * b2 * (a2 - b2) ** 2 / c2
    return p, q, r


def _newton_starts(p, q, r):
    """Starting points from the depressed-cubic trigonometric form."""
    pp = q - p * p / 3.0
    qq = 2.0 * p ** 3 / 27.0 - p * q / 3.0 + r
    shift = -p / 3.0
    if pp < 0.0:
        m = 2.0 * math.sqrt(-pp / 3.0)
        arg = 3.0 * qq / (pp * m)
        arg = max(-1.0, min(1.0, arg))
        phi = math.acos(arg)
        return [m * math.cos((phi - 2.0 * math.pi * k) / 3.0) + shift
                for k in range(3)]
    # single-real-root regime: one real start plus spread-out companions
    u = math.copysign(abs(qq / 2.0) ** (1.0 / 3.0), -qq) if qq != 0.0 else 0.0
    spread = 1.0 + abs(shift)
    return [u + shift, u + shift + spread, u + shift - spread]


def cubic_real_roots(p, q, r):
    """Real roots of the monic cubic, Newton-polished and deduplicated."""
    scale = max(1.0, abs(p), abs(q), abs(r))
    roots = []
    for w in _newton_starts(p, q, r):
        for _ in range(80):
            f = ((w + p) * w + q) * w + r
            fp = (3.0 * w + 2.0 * p) * w + q
            if fp == 0.0:
                w += 1e-9 * max(1.0, abs(w))
                continue
            step = f / fp
            w -= step
            if abs(step) <= 1e-15 * max(1.0, abs(w)):
                break
        f = ((w + p) * w + q) * w + r
        if abs(f) > 1e-7 * scale * max(1.0, abs(w)) ** 3:
            continue
        if not any(abs(w - seen) <= 1e-8 * max(1.0, abs(seen)) for seen in roots):
            roots.append(w)
    return roots


def side_from_bisectors(a, b, c):
    """Admissible side lengths opposite the incenter-bisector segment c.

    a and b are the vertex-to-incenter bisector lengths at the two endpoints
    of the sought side.  Roots w = z^2 are admissible when they lie strictly
    inside ((a-b)^2, (a+b)^2) and above a^2 + b^2.  Dual arguments are
    supported: the float root is re-polished in dual arithmetic, which yields
    the exact implicit derivative.
    """
    av, bv, cv = value(a), value(b), value(c)
    p, q, r = bisector_cubic_coeffs(av, bv, cv)
    lo = max((av - bv) ** 2, av * av + bv * bv)
    hi = (av + bv) ** 2
    admissible = [w for w in cubic_real_roots(p, q, r) if lo < w < hi]
    dualised = isinstance(a, DualScalar) or isinstance(b, DualScalar) \
        or isinstance(c, DualScalar)
    if not dualised:
        return [math.sqrt(w) for w in admissible]
    pd, qd, rd = bisector_cubic_coeffs(a, b, c)
    out = []
    for w in admissible:
        wd = DualScalar(w, 0.0)
        for _ in range(3):  # one step suffices from a converged root
            f = ((wd + pd) * wd + qd) * wd + rd
            fp = (3.0 * wd + 2.0 * pd) * wd + qd
            wd = wd - f / fp
        out.append(sqrt(wd))
    return out
