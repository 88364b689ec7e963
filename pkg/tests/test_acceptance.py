"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the per-criterion
lines; every tolerance is pinned here, none are configurable.
"""

import math
import random
import time

from geodiff import geom, homogeneity, odes, polyroots, sampling
from geodiff.cli import RunConfig, run

SQ2 = math.sqrt(2.0)
SQ3 = math.sqrt(3.0)


def report(criterion, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'}  criterion {criterion}: {detail}"
    print(line)
    assert ok, line


def test_criterion_1_theorem_oracle_equivalence():
    t0 = time.time()
    rep = run(RunConfig(suite="theorems", cases=10000, seed=12345))
    elapsed = time.time() - t0
    ok = (rep.summary["failures"] == 0
          and rep.summary["max_rel_err"] < 1e-9
          and elapsed < 10.0)
    report(1, ok,
           f"10^4 random triangles, every op vs oracle: max rel err "
           f"{rep.summary['max_rel_err']:.2e} < 1e-9, "
           f"{rep.summary['failures']} failures, {elapsed:.1f}s < 10s")


def test_criterion_2_anchor_values():
    checks = [
        ("R(1,1,1)", geom.circumradius(geom.Triangle(1, 1, 1)), SQ3 / 3.0),
        ("A(1,1,sqrt2)", geom.triangle_area(geom.Triangle(1, 1, SQ2)), 0.5),
        ("d(R/2,R)", geom.euler_distance(geom.IncirclePair(1.25, 2.5)), 0.0),
        ("r(2sqrt3,..)", geom.inradius(
            geom.Triangle(2 * SQ3, 2 * SQ3, 2 * SQ3)), 1.0),
    ]
    worst = 0.0
    for label, got, want in checks:
        err = abs(got - want) / max(abs(want), 1.0)
        worst = max(worst, err)
    rng = random.Random(2)
    for _ in range(100):
        t = sampling.triangle(rng)
        want = (t.x + t.y) / (t.x + t.y + t.z)
        worst = max(worst, abs(geom.incenter_ratio(t) - want) / want)
    report(2, worst < 1e-12,
           f"anchor values and incenter ratio reproduced, worst rel err "
           f"{worst:.2e} < 1e-12")


def test_criterion_3_derivation_convergence():
    t0 = time.time()
    h = (1e-1, 1e-2, 1e-3)
    bad = []
    for entry in odes.catalog():
        if entry.residual_only:
            continue
        rep = odes.convergence(entry, h)
        order_ok = rep.rk4_exact or 3.5 <= rep.fitted_order <= 4.5
        endpoint_ok = rep.errors[-1] < 1e-7
        if not (order_ok and endpoint_ok):
            bad.append((entry.name, rep.fitted_order, rep.errors[-1]))
    elapsed = time.time() - t0
    report(3, not bad and elapsed < 30.0,
           f"all anchored entries: fitted order in [3.5, 4.5] (or exact), "
           f"err@1e-3 < 1e-7, {elapsed:.1f}s < 30s"
           + (f"; offenders {bad}" if bad else ""))


def test_criterion_4_residual_mode():
    worst = {}
    for name in odes.RESIDUAL_ONLY:
        entry = next(p for p in odes.catalog() if p.name == name)
        worst[name] = odes.residual(entry, 1000).max_residual
    ok = all(v < 1e-8 for v in worst.values())
    detail = ", ".join(f"{k}={v:.1e}" for k, v in worst.items())
    report(4, ok, f"residual-mode entries over 10^3 points: {detail} (< 1e-8)")


def test_criterion_5_homogeneity():
    rng = random.Random(55)
    worst_res = 0.0
    worst_lam = 0.0
    for fd in homogeneity.registry():
        for _ in range(1000):
            point = fd.sample(rng)
            worst_res = max(worst_res, homogeneity.scale_residual(fd, point))
        for _ in range(100):
            point = fd.sample(rng)
            f0 = fd.evaluate(*point)
            for lam in (0.5, 2.0):
                got = fd.evaluate(*homogeneity.scaled_point(fd, point, lam))
                want = lam ** fd.out_dim * f0
                worst_lam = max(worst_lam,
                                abs(got - want) / max(abs(want), 1e-30))
    ok = worst_res < 1e-10 and worst_lam < 1e-12
    report(5, ok,
           f"scale identity at 10^3 points per formula: residual "
           f"{worst_res:.2e} < 1e-10; finite scaling defect "
           f"{worst_lam:.2e} < 1e-12")


def test_criterion_6_bisector_problem_roundtrip():
    abc = geom.incenter_bisector_lengths(geom.Triangle(3, 4, 5))
    sides = geom.bisector_problem_solve(*abc)
    worst = max(abs(g - w) / w for g, w in zip(sides, (3.0, 4.0, 5.0)))
    rng = random.Random(66)
    for _ in range(1000):
        t = sampling.triangle(rng)
        got = geom.bisector_problem_solve(*geom.incenter_bisector_lengths(t))
        worst = max(worst, max(abs(g - w) / w for g, w in zip(got, t.sides)))
    report(6, worst < 1e-8,
           f"(3,4,5) plus 10^3 random triangles recovered from bisector "
           f"lengths, worst rel err {worst:.2e} < 1e-8")


def test_criterion_7_root_tracking():
    t0 = time.time()
    rng = random.Random(77)
    worst_track = 0.0
    worst_sens = 0.0
    for _ in range(100):
        degree = rng.randint(2, 8)
        coeffs = [rng.uniform(-5.0, 5.0) for _ in range(degree)] + [1.0]
        target = polyroots.Poly(tuple(complex(c) for c in coeffs))
        tracked = polyroots.track(polyroots.make_path(target, rng=rng))
        dist = polyroots.match_distance(tracked, polyroots.oracle_roots(target))
        worst_track = max(worst_track, dist)

        a = rng.uniform(0.5, 3.0)
        r1 = rng.uniform(-3.0, 3.0)
        r2 = r1 + rng.uniform(0.5, 3.0)
        b, c = -a * (r1 + r2), a * r1 * r2
        sens = polyroots.quadratic_sensitivities(a, b, c, r2)
        h = 1e-7

        def root_near(aa, bb, cc):
            d = math.sqrt(bb * bb - 4 * aa * cc)
            return min(((-bb + d) / (2 * aa), (-bb - d) / (2 * aa)),
                       key=lambda r: abs(r - r2))

        fd = ((root_near(a + h, b, c) - root_near(a - h, b, c)) / (2 * h),
              (root_near(a, b + h, c) - root_near(a, b - h, c)) / (2 * h),
              (root_near(a, b, c + h) - root_near(a, b, c - h)) / (2 * h))
        worst_sens = max(worst_sens,
                         max(abs(s.real - f) / max(abs(f), 1e-30)
                             for s, f in zip(sens, fd)))
    elapsed = time.time() - t0
    ok = worst_track < 1e-6 and worst_sens < 1e-5 and elapsed < 10.0
    report(7, ok,
           f"100 random polynomials: track-vs-oracle {worst_track:.2e} < 1e-6, "
           f"sensitivities vs finite differences {worst_sens:.2e} < 1e-5, "
           f"{elapsed:.1f}s < 10s")


def test_criterion_8_determinism():
    cfg = RunConfig(suite="all", cases=40, seed=2024)
    first = run(cfg)
    second = run(cfg)
    ok = first.records == second.records and first.summary == second.summary
    report(8, ok,
           f"two runs with an identical seed produced identical "
           f"{len(first.records)} records")
