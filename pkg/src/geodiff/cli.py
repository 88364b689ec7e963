"""Command-line verification driver.

``geodiff --suite <name> --cases N --seed S [--tol T] [--h 1e-1,1e-2,1e-3]
[--output PATH] [--format csv|json] [--config PATH]``

Suites: theorems (closed forms vs the coordinate oracle), derive (ODE
convergence and residuals), scale (homogeneity sweep), roots (continuation
vs simultaneous iteration), or all.  Reports are deterministic for a fixed
(config, seed); the timestamp lives in the JSON header, never in records.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import random
import sys
import time
from dataclasses import asdict, dataclass, field

from . import __version__, geom, homogeneity, odes, oracle, polyroots, sampling

SUITES = ("theorems", "derive", "scale", "roots", "all")
DEFAULT_H = (1e-1, 1e-2, 1e-3)

THEOREMS_TOL = 1e-9
SCALE_TOL = 1e-10
LAMBDA_TOL = 1e-12
ROOTS_TOL = 1e-6
SENS_TOL = 1e-5
ENDPOINT_TOL = 1e-7
RESIDUAL_TOL = 1e-8
ORDER_RANGE = (3.5, 4.5)


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    suite: str = "all"
    cases: int = 1000
    seed: int = 0
    tol: float | None = None
    h_values: tuple[float, ...] = DEFAULT_H
    output: str | None = None
    format: str = "csv"

    def __post_init__(self):
        if self.suite not in SUITES:
            raise ConfigError(f"unknown suite {self.suite!r}")
        if self.cases < 1:
            raise ConfigError("cases must be >= 1")
        if self.tol is not None and not self.tol > 0.0:
            raise ConfigError("tol must be positive")
        hs = tuple(self.h_values)
        if len(hs) < 1 or any(h <= 0.0 for h in hs):
            raise ConfigError("h values must be positive")
        if any(b >= a for a, b in zip(hs, hs[1:])):
            raise ConfigError("h values must be strictly decreasing")
        object.__setattr__(self, "h_values", hs)
        if self.format not in ("csv", "json"):
            raise ConfigError(f"unknown format {self.format!r}")


@dataclass(frozen=True)
class Record:
    suite: str
    case_id: int
    op: str
    inputs: str
    expected: str
    actual: str
    rel_err: float
    passed: bool


@dataclass
class Report:
    config: RunConfig
    records: list[Record] = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    version: str = __version__
    timestamp: str = ""


def _fmt(*values) -> str:
    return ";".join(repr(float(v)) for v in values)


def _rel(actual: float, expected: float) -> float:
    return abs(actual - expected) / max(abs(expected), 1e-30)


def _record(suite, case_id, op, inputs, expected, actual, tol) -> Record:
    err = _rel(actual, expected)
    return Record(suite, case_id, op, inputs, _fmt(expected), _fmt(actual),
                  err, err < tol)


# --- suites ---------------------------------------------------------------------


def run_theorems(rng: random.Random, cases: int, tol: float) -> list[Record]:
    out = []
    for i in range(cases):
        t = sampling.triangle(rng)
        e = oracle.embed_triangle(t)
        ins = _fmt(*t.sides)
        split = sampling.cevian_split(rng, t.z)
        pairs = [
            ("median", geom.median(t), oracle.measure_median(e), ins),
            ("cevian", geom.cevian(t, split),
             oracle.measure_cevian(e, split.m, split.n),
             _fmt(t.x, t.y, split.m, split.n)),
            ("triangle_area", geom.triangle_area(t), oracle.measure_area(e), ins),
            ("angle_from_sides", geom.angle_from_sides(t),
             oracle.measure_angle_gamma(e), ins),
            ("bisector_full", geom.bisector_full(t),
             oracle.measure_bisector_full(e), ins),
            ("bisector_to_incenter", geom.bisector_to_incenter(t),
             oracle.measure_bisector_to_incenter(e), ins),
            ("incenter_ratio", geom.incenter_ratio(t),
             oracle.measure_bisector_to_incenter(e)
             / oracle.measure_bisector_full(e), ins),
            ("circumradius", geom.circumradius(t),
             oracle.measure_circumradius(e), ins),
            ("inradius", geom.inradius(t), oracle.measure_inradius(e), ins),
        ]
        r_m = oracle.measure_inradius(e)
        big_m = oracle.measure_circumradius(e)
        pairs.append(("euler_distance",
                      geom.euler_distance(geom.IncirclePair(r_m, big_m)),
                      oracle.measure_euler_distance(e), _fmt(r_m, big_m)))

        legs = (sampling.length(rng), sampling.length(rng))
        pairs.append(("hypotenuse", geom.hypotenuse(*legs),
                      oracle.right_triangle_hypotenuse(*legs), _fmt(*legs)))
        x3 = sampling.length(rng)
        beta, gamma = sampling.angle_pair(rng)
        pairs.append(("third_side", geom.third_side(x3, beta, gamma),
                      oracle.third_side_by_construction(x3, beta, gamma),
                      _fmt(x3, beta, gamma)))
        theta = sampling.central_angle(rng)
        apex = theta + rng.uniform(0.02, 0.98) * (2.0 * math.pi - theta)
        pairs.append(("inscribed_angle", geom.inscribed_angle(theta),
                      oracle.inscribed_angle_by_construction(theta, apex),
                      _fmt(theta)))
        tt = sampling.trirect(rng)
        pairs.append(("trirect_face_area", geom.trirect_face_area(tt),
                      oracle.measure_trirect(tt), _fmt(tt.x, tt.y, tt.z)))
        quad = sampling.cyclic_quad(rng)
        ce = oracle.embed_cyclic(quad)
        pairs.append(("ptolemy_diagonal", geom.ptolemy_diagonal(quad),
                      oracle.cyclic_diagonal(ce), _fmt(*quad.sides)))
        pairs.append(("cyclic_quad_area", geom.cyclic_quad_area(quad),
                      oracle.cyclic_area(ce), _fmt(*quad.sides)))

        for op, actual, expected, inputs in pairs:
            out.append(_record("theorems", i, op, inputs, expected, actual, tol))

        abc = geom.incenter_bisector_lengths(t)
        try:
            recovered = geom.bisector_problem_solve(*abc)
            err = max(_rel(got, want) for got, want in zip(recovered, t.sides))
            out.append(Record("theorems", i, "bisector_problem", _fmt(*abc),
                              _fmt(*t.sides), _fmt(*recovered), err, err < tol))
        except geom.GeometryError as exc:
            out.append(Record("theorems", i, "bisector_problem", _fmt(*abc),
                              _fmt(*t.sides), type(exc).__name__,
                              math.inf, False))
    return out


def run_derive(cases: int, h_values, tol: float | None) -> tuple[list[Record], dict]:
    out = []
    orders = {}
    endpoint_tol = tol if tol is not None else ENDPOINT_TOL
    residual_tol = tol if tol is not None else RESIDUAL_TOL
    for entry in odes.catalog():
        if entry.residual_only:
            res = odes.residual(entry, max(2, cases))
            out.append(Record("derive", 0, f"{entry.name}:residual",
                              _fmt(*entry.s_range), "0.0",
                              _fmt(res.max_residual), res.max_residual,
                              res.max_residual < residual_tol))
            continue
        rep = odes.convergence(entry, h_values)
        orders[entry.name] = rep.fitted_order
        exact = odes.reference_endpoint(entry)
        for h, endpoint, err in zip(rep.h_values, rep.endpoints, rep.errors):
            judged = h == min(rep.h_values)
            out.append(Record("derive", 0, f"{entry.name}:h={h:g}", _fmt(h),
                              _fmt(exact), _fmt(endpoint),
                              err / max(abs(exact), 1e-30),
                              (err < endpoint_tol) if judged else True))
        order_ok = rep.rk4_exact \
            or ORDER_RANGE[0] <= rep.fitted_order <= ORDER_RANGE[1]
        out.append(Record("derive", 0, f"{entry.name}:order",
                          _fmt(*rep.h_values), "4.0", _fmt(rep.fitted_order),
                          abs(rep.fitted_order - 4.0) / 4.0, order_ok))
    return out, orders


def run_scale(rng: random.Random, cases: int, tol: float | None) -> list[Record]:
    out = []
    res_tol = tol if tol is not None else SCALE_TOL
    for fd in homogeneity.registry():
        for i in range(cases):
            point = fd.sample(rng)
            res = homogeneity.scale_residual(fd, point)
            out.append(Record("scale", i, fd.name, _fmt(*point), "0.0",
                              _fmt(res), res, res < res_tol))
            f0 = fd.evaluate(*point)
            for lam in (0.5, 2.0):
                scaled = fd.evaluate(*homogeneity.scaled_point(fd, point, lam))
                want = lam ** fd.out_dim * f0
                err = _rel(scaled, want)
                out.append(Record("scale", i, f"{fd.name}:lam={lam:g}",
                                  _fmt(*point), _fmt(want), _fmt(scaled), err,
                                  err < LAMBDA_TOL))
    return out


def run_roots(rng: random.Random, cases: int, tol: float | None) -> list[Record]:
    out = []
    track_tol = tol if tol is not None else ROOTS_TOL
    for i in range(cases):
        degree = rng.randint(2, 8)
        coeffs = [rng.uniform(-5.0, 5.0) for _ in range(degree)] + [1.0]
        target = polyroots.Poly(tuple(complex(c) for c in coeffs))
        path = polyroots.make_path(target, rng=rng)
        try:
            tracked = polyroots.track(path)
            reference = polyroots.oracle_roots(target)
            dist = polyroots.match_distance(tracked, reference)
            out.append(Record("roots", i, "track",
                              _fmt(*coeffs), "0.0", _fmt(dist), dist,
                              dist < track_tol))
        except (polyroots.PathSingularityError, polyroots.TrackingFailureError,
                polyroots.OracleFailureError) as exc:
            out.append(Record("roots", i, "track", _fmt(*coeffs), "0.0",
                              type(exc).__name__, math.inf, False))

        a = rng.uniform(0.5, 3.0)
        r1 = rng.uniform(-3.0, 3.0)
        r2 = r1 + rng.uniform(0.5, 3.0)
        b, c = -a * (r1 + r2), a * r1 * r2
        sens = polyroots.quadratic_sensitivities(a, b, c, r2)
        step = 1e-7
        fds = []
        for j, delta in enumerate(((step, 0, 0), (0, step, 0), (0, 0, step))):
            hi = _quad_root_near(a + delta[0], b + delta[1], c + delta[2], r2)
            lo = _quad_root_near(a - delta[0], b - delta[1], c - delta[2], r2)
            fds.append((hi - lo) / (2.0 * step))
        err = max(abs(s.real - f) / max(abs(f), 1e-30)
                  for s, f in zip(sens, fds))
        out.append(Record("roots", i, "quad_sens", _fmt(a, b, c, r2), "0.0",
                          _fmt(err), err, err < SENS_TOL))
    return out


def _quad_root_near(a: float, b: float, c: float, near: float) -> float:
    disc = math.sqrt(b * b - 4.0 * a * c)
    roots = ((-b + disc) / (2.0 * a), (-b - disc) / (2.0 * a))
    return min(roots, key=lambda r: abs(r - near))


# --- driver ---------------------------------------------------------------------


def run(config: RunConfig) -> Report:
    report = Report(config=config,
                    timestamp=time.strftime("%Y-%m-%dT%H:%M:%S"))
    wanted = SUITES[:-1] if config.suite == "all" else (config.suite,)
    orders = {}
    for name in wanted:
        rng = random.Random(f"{config.seed}:{name}")
        if name == "theorems":
            report.records.extend(run_theorems(
                rng, config.cases, config.tol or THEOREMS_TOL))
        elif name == "derive":
            recs, orders = run_derive(config.cases, config.h_values, config.tol)
            report.records.extend(recs)
        elif name == "scale":
            report.records.extend(run_scale(rng, config.cases, config.tol))
        elif name == "roots":
            report.records.extend(run_roots(rng, config.cases, config.tol))
    finite = [r.rel_err for r in report.records
              if math.isfinite(r.rel_err) and not r.op.endswith(":order")]
    report.summary = {
        "records": len(report.records),
        "failures": sum(not r.passed for r in report.records),
        "max_rel_err": max(finite) if finite else 0.0,
        "fitted_orders": orders,
    }
    return report


def write_report(report: Report, path: str, fmt: str) -> None:
    if fmt == "csv":
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["suite", "case_id", "op", "inputs", "expected",
                             "actual", "rel_err", "passed"])
            for r in report.records:
                writer.writerow([r.suite, r.case_id, r.op, r.inputs, r.expected,
                                 r.actual, repr(r.rel_err), r.passed])
    else:
        payload = {
            "timestamp": report.timestamp,
            "version": report.version,
            "config": asdict(report.config),
            "summary": report.summary,
            "records": [asdict(r) for r in report.records],
        }
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=1)
            fh.write("\n")


def parse_config(argv, config_file: str | None = None) -> RunConfig:
    """Build a RunConfig: flags override file values override defaults."""
    parser = argparse.ArgumentParser(
        prog="geodiff", description="verification suites for metric identities")
    parser.add_argument("--suite", choices=SUITES)
    parser.add_argument("--cases", type=int)
    parser.add_argument("--seed", type=int)
    parser.add_argument("--tol", type=float)
    parser.add_argument("--h", dest="h_values",
                        type=lambda s: tuple(float(v) for v in s.split(",")))
    parser.add_argument("--output")
    parser.add_argument("--format", choices=("csv", "json"))
    parser.add_argument("--config", dest="config_path")
    ns = parser.parse_args(argv)

    values: dict = {}
    path = config_file or ns.config_path
    if path:
        try:
            with open(path, encoding="utf-8") as fh:
                loaded = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config file {path}: {exc}") from exc
        if not isinstance(loaded, dict):
            raise ConfigError("config file must hold a JSON object")
        known = {"suite", "cases", "seed", "tol", "h_values", "output", "format"}
        for key, val in loaded.items():
            if key not in known:
                raise ConfigError(f"unknown config key {key!r}")
            values[key] = tuple(val) if key == "h_values" else val
    for key in ("suite", "cases", "seed", "tol", "h_values", "output", "format"):
        flag = getattr(ns, key)
        if flag is not None:
            values[key] = flag
    try:
        return RunConfig(**values)
    except TypeError as exc:
        raise ConfigError(str(exc)) from exc


def main(argv=None) -> int:
    try:
        config = parse_config(argv if argv is not None else sys.argv[1:])
    except ConfigError as exc:
        print(f"geodiff: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:
        return int(exc.code or 0)
    report = run(config)
    if config.output:
        try:
            write_report(report, config.output, config.format)
        except OSError as exc:
            print(f"geodiff: cannot write {config.output}: {exc}", file=sys.stderr)
            return 2
    s = report.summary
    print(f"suite={config.suite} records={s['records']} "
          f"failures={s['failures']} max_rel_err={s['max_rel_err']:.3e}")
    return 0 if s["failures"] == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
