"""Polynomial root tracking along coefficient paths.

A root x of P(x) = sum a_k x^k responds to coefficient changes through
dx/da_k = -x^k / P'(x).  Moving the coefficients linearly from a start system
with known roots to a target polynomial and chaining these sensitivities
gives dx/dt = -sum_k (da_k/dt) x^k / P'_t(x), integrated here with RK4 and
re-converged after every step by a few Newton corrections.

Paths use complex arithmetic with a random unit twist on the start system:
real coefficient paths generically pass through discriminant zeros, while a
twisted path misses them with probability one.  Twisted paths can still pass
*near* each other, and a predictor that jumps across such an encounter lands
in the Newton basin of the wrong root, so each macro step is accepted only
when one full step and two half steps agree (step-doubling error control) and
the Newton correction stays small; otherwise the step is refined locally, to
a bounded depth.  A hop that survives all of that would have to produce a
duplicate, which the final pairing check turns into a hard error.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment

LEADING_TOL = 1e-12
START_RESIDUAL_TOL = 1e-10
FINAL_RESIDUAL_TOL = 1e-8
DERIV_FLOOR = 1e-12
NEWTON_STEPS = 5
LOCAL_TOL = 1e-8      # step-doubling agreement, relative to the root scale
MAX_REFINE_DEPTH = 20


class PathSingularityError(RuntimeError):
    """P'_t vanished along the path; carries the failing step index."""


class TrackingFailureError(RuntimeError):
    """A tracked root failed to converge onto the target polynomial."""


class OracleFailureError(RuntimeError):
    """Simultaneous iteration did not converge."""


class RepeatedRootError(ValueError):
    """Sensitivities are undefined at a repeated root."""


@dataclass(frozen=True)
class Poly:
    """Coefficients a_0..a_n, low order first."""

    coeffs: tuple[complex, ...]

    def __post_init__(self):
        if len(self.coeffs) < 2:
            raise ValueError("degree must be at least 1")
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))
        if abs(self.coeffs[-1]) <= LEADING_TOL * self.scale:
            raise ValueError("leading coefficient is numerically zero")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def scale(self) -> float:
        return max(abs(c) for c in self.coeffs)

    def __call__(self, x: complex) -> complex:
        acc = 0.0 + 0.0j
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def deriv(self, x: complex) -> complex:
        acc = 0.0 + 0.0j
        for k in range(self.degree, 0, -1):
            acc = acc * x + k * self.coeffs[k]
        return acc


def unit_circle_start(n: int) -> tuple[Poly, tuple[complex, ...]]:
    """x^n - 1 and its roots of unity: simple roots, uniform conditioning."""
    coeffs = [-1.0 + 0.0j] + [0.0j] * (n - 1) + [1.0 + 0.0j]
    roots = tuple(cmath.exp(2j * math.pi * k / n) for k in range(n))
    return Poly(tuple(coeffs)), roots


@dataclass(frozen=True)
class ContinuationPath:
    """Linear coefficient homotopy (1-t)*gamma*start + t*target."""

    start: Poly
    start_roots: tuple[complex, ...]
    target: Poly
    steps: int = 64
    gamma: complex = 1.0 + 0.0j

    def __post_init__(self):
        if self.start.degree != self.target.degree:
            raise ValueError("start and target degrees differ")
        if abs(abs(self.gamma) - 1.0) > 1e-12:
            raise ValueError("gamma must have unit magnitude")
        if self.steps < 1:
            raise ValueError("need at least one step")
        bound = START_RESIDUAL_TOL * self.start.scale
        for r in self.start_roots:
            if abs(self.start(r)) > bound * max(1.0, abs(r)) ** self.start.degree:
                raise ValueError(f"start root {r} does not satisfy the start system")

    def at(self, t: float) -> Poly:
        g = (1.0 - t) * self.gamma
        return Poly(tuple(g * s + t * q
                          for s, q in zip(self.start.coeffs, self.target.coeffs)))

    def coeff_rate(self) -> tuple[complex, ...]:
        return tuple(q - self.gamma * s
                     for s, q in zip(self.start.coeffs, self.target.coeffs))


def make_path(target: Poly, steps: int = 64,
              rng: random.Random | None = None) -> ContinuationPath:
    """Default path from the twisted unit-circle start system."""
    start, roots = unit_circle_start(target.degree)
    u = rng.random() if rng is not None else 0.6180339887498949
    gamma = cmath.exp(2j * math.pi * u)
    return ContinuationPath(start, roots, target, steps, gamma)


def track(path: ContinuationPath) -> list[complex]:
    """Advance every start root to t = 1 and return the corrected roots.

    path.steps is the macro schedule; a macro step that fails the
    step-doubling agreement or the corrector quality test is split in half
    recursively, at most MAX_REFINE_DEPTH times, before giving up with a
    path-singularity error.
    """
    rates = path.coeff_rate()
    n = path.target.degree
    cache: dict[float, Poly] = {}

    def poly_at(t: float) -> Poly:
        p = cache.get(t)
        if p is None:
            p = cache[t] = path.at(t)
        return p

    def velocity(p_t: Poly, x: complex, step_index: int) -> complex:
        dp = p_t.deriv(x)
        if abs(dp) < DERIV_FLOOR * p_t.scale * max(1.0, abs(x)) ** (n - 1):
            raise PathSingularityError(
                f"P' vanished along the path at step {step_index}")
        num = 0.0 + 0.0j
        for k in range(n, -1, -1):
            num = num * x + rates[k]
        return -num / dp

    def rk4(t0: float, t1: float, x: complex, step_index: int) -> complex:
        h = t1 - t0
        pm = poly_at(t0 + h / 2.0)
        k1 = velocity(poly_at(t0), x, step_index)
        k2 = velocity(pm, x + h / 2.0 * k1, step_index)
        k3 = velocity(pm, x + h / 2.0 * k2, step_index)
        k4 = velocity(poly_at(t1), x + h * k3, step_index)
        return x + h * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0

    def advance(t0: float, t1: float, x: complex, step_index: int,
                depth: int) -> complex:
        tm = 0.5 * (t0 + t1)
        accepted = False
        corrected = x
        try:
            one = rk4(t0, t1, x, step_index)
            two = rk4(tm, t1, rk4(t0, tm, x, step_index), step_index)
            if abs(one - two) <= LOCAL_TOL * max(1.0, abs(two)):
                p_end = poly_at(t1)
                corrected = two
                converged = False
                for _ in range(NEWTON_STEPS):
                    fx = p_end(corrected)
                    if abs(fx) <= 1e-13 * p_end.scale \
                            * max(1.0, abs(corrected)) ** n:
                        converged = True
                        break
                    dp = p_end.deriv(corrected)
                    if abs(dp) < DERIV_FLOOR * p_end.scale \
                            * max(1.0, abs(corrected)) ** (n - 1):
                        raise PathSingularityError(
                            f"P' vanished in correction at step {step_index}")
                    corrected = corrected - fx / dp
                else:
                    converged = abs(p_end(corrected)) <= 1e-13 * p_end.scale \
                        * max(1.0, abs(corrected)) ** n
                accepted = converged and abs(corrected - two) \
                    <= 0.25 * abs(two - x) + 1e-12 * max(1.0, abs(corrected))
        except PathSingularityError:
            if depth >= MAX_REFINE_DEPTH:
                raise
            accepted = False
        if accepted:
            return corrected
        if depth >= MAX_REFINE_DEPTH:
            raise PathSingularityError(
                f"refinement exhausted at step {step_index} (t={t0:.6f})")
        xm = advance(t0, tm, x, step_index, depth + 1)
        return advance(tm, t1, xm, step_index, depth + 1)

    out = []
    dt = 1.0 / path.steps
    for x in path.start_roots:
        for i in range(path.steps):
            x = advance(i * dt, (i + 1) * dt, x, i, 0)
        for _ in range(3 * NEWTON_STEPS):  # final polish on the exact target
            fx = path.target(x)
            dp = path.target.deriv(x)
            if abs(dp) == 0.0:
                break
            step = fx / dp
            x = x - step
            if abs(step) <= 1e-15 * max(1.0, abs(x)):
                break
        if not (math.isfinite(x.real) and math.isfinite(x.imag)):
            raise TrackingFailureError("tracked root diverged")
        bound = FINAL_RESIDUAL_TOL * path.target.scale * max(1.0, abs(x)) ** n
        if abs(path.target(x)) >= bound:
            raise TrackingFailureError(
                f"tracked root {x} has residual {abs(path.target(x))} >= {bound}")
        out.append(x)
    for i, a in enumerate(out):  # a silent hop would show up as a duplicate
        for b in out[:i]:
            if abs(a - b) <= 1e-8 * (1.0 + abs(a)) \
                    and abs(path.target.deriv(a)) > 1e-6 * path.target.scale:
                raise TrackingFailureError(
                    f"two paths landed on the same simple root {a}")
    return out


def quadratic_sensitivities(a: float, b: float, c: float,
                            x: complex) -> tuple[complex, complex, complex]:
    """(dx/da, dx/db, dx/dc) for a root x of a x^2 + b x + c."""
    denom = 2.0 * a * x + b
    if abs(denom) < 1e-12 * max(abs(a), abs(b), abs(c), 1.0):
        raise RepeatedRootError(f"2ax + b vanishes at x={x}")
    return (-x * x / denom, -x / denom, -1.0 / denom)


def oracle_roots(p: Poly, max_iter: int = 1000) -> list[complex]:
    """All roots by simultaneous (Durand-Kerner) iteration.

    Starts are perturbed points on a circle of Cauchy-bound radius, offset
    from the real axis so real-coefficient symmetry cannot stall the sweep.
    """
    n = p.degree
    lead = p.coeffs[-1]
    radius = 1.0 + max(abs(c) for c in p.coeffs[:-1]) / abs(lead)
    xs = [radius * cmath.exp(2j * math.pi * (k + 0.25) / n) for k in range(n)]
    for _ in range(max_iter):
        biggest = 0.0
        for i in range(n):
            prod = lead
            for j in range(n):
                if j != i:
                    prod *= xs[i] - xs[j]
            delta = p(xs[i]) / prod
            xs[i] -= delta
            biggest = max(biggest, abs(delta))
        if biggest < 1e-12 * max(1.0, max(abs(x) for x in xs)):
            return xs
    raise OracleFailureError(f"no convergence after {max_iter} iterations")


def match_distance(found: list[complex], reference: list[complex]) -> float:
    """Largest pairing distance under the optimal one-to-one assignment."""
    if len(found) != len(reference):
        raise ValueError("root multisets differ in size")
    cost = np.array([[abs(f - r) for r in reference] for f in found])
    rows, cols = linear_sum_assignment(cost)
    return float(cost[rows, cols].max())
