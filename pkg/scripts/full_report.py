"""Sweep the verification suite over a range of signatures.

Runs every check at each signature with p+q <= --max-n and prints one row
per signature.  Useful for spotting where exhaustive mode hands over to
sampling (n = 7) and for timing the exact kernel as n grows.

    python3 scripts/full_report.py --max-n 6 --samples 100
"""

import argparse
import sys
import time

from quatype.blades import Signature
from quatype.verify import CheckConfig, CheckStatus, run_suite


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=5, help="largest p+q to sweep")
    ap.add_argument("--min-n", type=int, default=1, help="smallest p+q to sweep")
    ap.add_argument("--samples", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--tol", type=float, default=1e-12)
    ap.add_argument("--suite", default="all")
    args = ap.parse_args(argv)

    print(f"{'signature':<10} {'pass':>5} {'fail':>5} {'skip':>5} {'cases':>9} "
          f"{'time':>8}")
    grand = {status: 0 for status in CheckStatus}
    failures = []
    for n in range(args.min_n, args.max_n + 1):
        for p in range(n + 1):
            sig = Signature(p, n - p)
            cfg = CheckConfig(sig=sig, seed=args.seed, samples=args.samples,
                              tol=args.tol)
            t0 = time.monotonic()
            reports = run_suite([args.suite], cfg)
            dt = time.monotonic() - t0
            counts = {status: 0 for status in CheckStatus}
            for r in reports:
                counts[r.status] += 1
                grand[r.status] += 1
                if r.status is CheckStatus.FAIL:
                    failures.append((sig, r))
            cases = sum(r.cases_run for r in reports)
            print(f"{str(sig):<10} {counts[CheckStatus.PASS]:>5} "
                  f"{counts[CheckStatus.FAIL]:>5} "
                  f"{counts[CheckStatus.SKIPPED]:>5} {cases:>9} {dt:>7.2f}s")

    print(f"\ntotal: {grand[CheckStatus.PASS]} pass, {grand[CheckStatus.FAIL]} "
          f"fail, {grand[CheckStatus.SKIPPED]} skipped")
    for sig, r in failures:
        print(f"  FAIL {sig} {r.name}: {r.notes or ''}")
        if r.counterexample is not None:
            ce = r.counterexample
            print(f"       {ce.operation}({ce.lhs}"
                  f"{', ' + ce.rhs if ce.rhs else ''}) -> {ce.component}, "
                  f"magnitude {ce.magnitude:g}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
