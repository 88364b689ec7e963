#!/usr/bin/env python3
"""Run every verification suite and write reports under out/.

Usage: python scripts/verify_all.py [seed]

Prints the convergence-order table for the anchored derivations, the
residual-mode defects, and one summary line per suite; exits nonzero if any
record failed.
"""

import pathlib
import sys

from geodiff import odes
from geodiff.cli import RunConfig, run, write_report


def main() -> int:
    seed = int(sys.argv[1]) if len(sys.argv) > 1 else 0
    out_dir = pathlib.Path(__file__).resolve().parent.parent / "out"
    out_dir.mkdir(exist_ok=True)

    print("fitted RK4 convergence orders (h = 1e-1, 1e-2, 1e-3)")
    print(f"{'derivation':<16}{'order':>8}  {'err@1e-3':>10}  {'residual':>10}")
    for entry in odes.catalog():
        if entry.residual_only:
            res = odes.residual(entry, 1000)
            print(f"{entry.name:<16}{'--':>8}  {'--':>10}  "
                  f"{res.max_residual:10.2e}")
            continue
        rep = odes.convergence(entry, (1e-1, 1e-2, 1e-3))
        order = "exact" if rep.rk4_exact else f"{rep.fitted_order:.3f}"
        print(f"{entry.name:<16}{order:>8}  {rep.errors[-1]:10.2e}  "
              f"{rep.max_residual:10.2e}")
    print()

    failures = 0
    for suite, cases in (("theorems", 10000), ("derive", 1000),
                         ("scale", 1000), ("roots", 100)):
        config = RunConfig(suite=suite, cases=cases, seed=seed, format="json")
        report = run(config)
        path = out_dir / f"{suite}.json"
        write_report(report, str(path), "json")
        s = report.summary
        failures += s["failures"]
        print(f"{suite:<9} records={s['records']:<6} failures={s['failures']:<3}"
              f" max_rel_err={s['max_rel_err']:.3e}  -> {path}")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
