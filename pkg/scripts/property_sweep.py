"""Seeded sweep over the corpus: random costs never push IP/LP above the gap."""

import argparse
import time

from vcgap.corpus import standard_corpus
from vcgap.suite import run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    start = time.perf_counter()
    results = run_suite(standard_corpus(), trials=args.trials, seed=args.seed, jobs=args.jobs)
    bad = 0
    for r in results:
        bad += len(r.violations)
        print(f"{r.name:<10} rho={str(r.rho):>7} max_ratio={str(r.max_ratio):>9} "
              f"trials={r.trials} lp_zero={r.undefined_ratios} violations={len(r.violations)}")
        for v in r.violations:
            print(f"    {v}")
    print(f"{bad} violations, {time.perf_counter() - start:.1f} s")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
