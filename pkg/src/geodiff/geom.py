"""Validated metric types and theorem operations.

Conventions, fixed once for the whole package:

==================  =========================================================
symbol              meaning
==================  =========================================================
x, y, z             triangle side lengths; gamma is the angle between the
                    x- and y-sides, i.e. opposite z
alpha, beta         angles opposite x and y respectively
m, n                z-side split of a cevian; m is adjacent to the x-side
x, y, u, v          cyclic quadrilateral sides in cyclic order
r, R                inradius and circumradius
a, b, c             vertex-to-incenter bisector segments at the alpha, beta
                    and gamma vertices (opposite x, y, z respectively)
==================  =========================================================

All angles are radians.  Median/cevian/bisector operations act on the gamma
vertex / the z-side; callers permute sides to reach the other vertices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from . import formulas

EPS_DEG = 1e-12          # relative degeneracy margin on strict inequalities
ACOS_SLACK = 1e-12       # roundoff slack before clamping an arccos argument
SPLIT_TOL = 1e-9         # relative tolerance for z = m + n
ROUNDTRIP_TOL = 1e-8     # bisector-problem root acceptance


class GeometryError(ValueError):
    """Base class for all domain violations raised by this module."""


class DomainError(GeometryError):
    """Input outside the operation's domain."""


class InconsistentSplitError(DomainError):
    """Cevian split does not sum to the z-side."""


class NoTriangleError(GeometryError):
    """The inverse bisector problem has no admissible solution."""


class AmbiguousRootsError(GeometryError):
    """The inverse bisector problem has several round-trip-consistent solutions."""


def _require_positive(**named) -> None:
    for name, v in named.items():
        if not math.isfinite(v) or v <= 0.0:
            raise DomainError(f"{name} must be a positive finite length, got {v!r}")


@dataclass(frozen=True)
class Triangle:
    """Side lengths of a nondegenerate triangle."""

    x: float
    y: float
    z: float
    eps_deg: float = EPS_DEG

    def __post_init__(self):
        _require_positive(x=self.x, y=self.y, z=self.z)
        margin = self.eps_deg * (self.x + self.y + self.z)
        for a, b, c in ((self.x, self.y, self.z), (self.y, self.z, self.x),
                        (self.z, self.x, self.y)):
            if a + b - c <= margin:
                raise DomainError(
                    f"degenerate triangle sides ({self.x}, {self.y}, {self.z})")

    @property
    def sides(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)


@dataclass(frozen=True)
class CevianSplit:
    """Lengths of the two z-side segments cut by a cevian; m is x-adjacent."""

    m: float
    n: float

    def __post_init__(self):
        _require_positive(m=self.m, n=self.n)


@dataclass(frozen=True)
class CyclicQuad:
    """Side lengths of a cyclic quadrilateral, in cyclic order."""

    x: float
    y: float
    u: float
    v: float

    def __post_init__(self):
        _require_positive(x=self.x, y=self.y, u=self.u, v=self.v)
        total = self.x + self.y + self.u + self.v
        margin = EPS_DEG * total
        for s in self.sides:
            if total - 2.0 * s <= margin:
                raise DomainError(
                    f"no circumscribed circle for sides {self.sides}")

    @property
    def sides(self) -> tuple[float, float, float, float]:
        return (self.x, self.y, self.u, self.v)


@dataclass(frozen=True)
class TrirectTetra:
    """Mutually perpendicular edge lengths at the right-angle corner."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        _require_positive(x=self.x, y=self.y, z=self.z)


@dataclass(frozen=True)
class IncirclePair:
    """Inradius and circumradius of one triangle; R >= 2r always holds."""

    r: float
    big_r: float

    def __post_init__(self):
        _require_positive(r=self.r, R=self.big_r)
        if self.big_r < 2.0 * self.r:
            raise DomainError(
                f"no triangle has R={self.big_r} < 2r={2.0 * self.r}")


# --- operations ----------------------------------------------------------------


def hypotenuse(x: float, y: float) -> float:
    _require_positive(x=x, y=y)
    return formulas.hypotenuse(x, y)


def median(t: Triangle) -> float:
    """Median to the z-side."""
    return formulas.median(t.x, t.y, t.z)


def cevian(t: Triangle, split: CevianSplit) -> float:
    """Cevian from the gamma vertex whose foot splits the z-side into m and n."""
    total = split.m + split.n
    if abs(t.z - total) > SPLIT_TOL * max(t.z, total):
        raise InconsistentSplitError(
            f"split m+n={total} does not match z={t.z}")
    return formulas.cevian(t.x, t.y, split.m, split.n)


def triangle_area(t: Triangle) -> float:
    return formulas.triangle_area(t.x, t.y, t.z)


def angle_from_sides(t: Triangle) -> float:
    """Gamma, the angle between the x- and y-sides, in (0, pi)."""
    arg = (t.x * t.x + t.y * t.y - t.z * t.z) / (2.0 * t.x * t.y)
    if abs(arg) > 1.0 + ACOS_SLACK:
        raise DomainError(f"cosine argument {arg} out of range")
    return math.acos(max(-1.0, min(1.0, arg)))


def bisector_full(t: Triangle) -> float:
    """Internal bisector of gamma, vertex to foot."""
    return formulas.bisector_full(t.x, t.y, t.z)


def bisector_to_incenter(t: Triangle) -> float:
    """Gamma vertex to incenter, along the bisector."""
    return formulas.bisector_to_incenter(t.x, t.y, t.z)


def incenter_ratio(t: Triangle) -> float:
    """bisector_to_incenter / bisector_full; equals (x+y)/(x+y+z)."""
    return bisector_to_incenter(t) / bisector_full(t)


def trirect_face_area(tt: TrirectTetra) -> float:
    return formulas.trirect_face_area(tt.x, tt.y, tt.z)


def inscribed_angle(theta: float) -> float:
    """Inscribed angle subtending the same arc as the central angle theta."""
    if not math.isfinite(theta) or theta < 0.0 or theta > 2.0 * math.pi:
        raise DomainError(f"central angle {theta!r} outside [0, 2*pi]")
    return formulas.inscribed_angle(theta)


def circumradius(t: Triangle) -> float:
    return formulas.circumradius(t.x, t.y, t.z)


def inradius(t: Triangle) -> float:
    return formulas.inradius(t.x, t.y, t.z)


def euler_distance(p: IncirclePair) -> float:
    """Distance between the incenter and the circumcenter."""
    return formulas.euler_distance(p.r, p.big_r)


def third_side(x: float, beta: float, gamma: float) -> float:
    """Side y opposite beta, given side x and its adjacent angles beta, gamma."""
    _require_positive(x=x)
    if beta <= 0.0 or gamma <= 0.0 or beta + gamma >= math.pi:
        raise DomainError(f"angles beta={beta}, gamma={gamma} do not fit a triangle")
    return formulas.third_side(x, beta, gamma)


def ptolemy_diagonal(q: CyclicQuad) -> float:
    """Diagonal joining the (v,x) and (y,u) vertices."""
    return formulas.ptolemy_diagonal(q.x, q.y, q.u, q.v)


def cyclic_quad_area(q: CyclicQuad) -> float:
    return formulas.cyclic_quad_area(q.x, q.y, q.u, q.v)


def incenter_bisector_lengths(t: Triangle) -> tuple[float, float, float]:
    """Vertex-to-incenter bisector lengths (a, b, c) at the alpha, beta, gamma
    vertices — the forward map inverted by bisector_problem_solve."""
    a = formulas.bisector_to_incenter(t.y, t.z, t.x)
    b = formulas.bisector_to_incenter(t.x, t.z, t.y)
    c = formulas.bisector_to_incenter(t.x, t.y, t.z)
    return (a, b, c)


def bisector_problem_solve(a: float, b: float, c: float) -> tuple[float, float, float]:
    """Recover side lengths (x, y, z) from vertex-to-incenter bisector lengths.

    Each side is a root of a cubic in its squared length; candidate triples
    are accepted only when the forward map reproduces (a, b, c) to relative
    ROUNDTRIP_TOL.  Zero surviving triples raises NoTriangleError, several
    distinct ones raise AmbiguousRootsError.
    """
    _require_positive(a=a, b=b, c=c)
    x_cands = formulas.side_from_bisectors(b, c, a)
    y_cands = formulas.side_from_bisectors(a, c, b)
    z_cands = formulas.side_from_bisectors(a, b, c)
    if not (x_cands and y_cands and z_cands):
        raise NoTriangleError(
            f"no admissible cubic root for bisector lengths ({a}, {b}, {c})")

    survivors: list[tuple[float, float, float]] = []
    for x, y, z in product(x_cands, y_cands, z_cands):
        try:
            t = Triangle(x, y, z)
        except DomainError:
            continue
        fwd = incenter_bisector_lengths(t)
        if all(abs(got - want) <= ROUNDTRIP_TOL * want
               for got, want in zip(fwd, (a, b, c))):
            if not any(all(abs(s - r) <= 1e-9 * r for s, r in zip((x, y, z), seen))
                       for seen in survivors):
                survivors.append((x, y, z))
    if not survivors:
        raise NoTriangleError(
            f"no candidate triple round-trips for bisector lengths ({a}, {b}, {c})")
    if len(survivors) > 1:
        raise AmbiguousRootsError(
            f"multiple round-trip-consistent triples: {survivors}")
    return survivors[0]
