"""Iterate the Mycielski construction from C5 and compare chi_f with x + 1/x."""

import argparse
import time
from fractions import Fraction

from vcgap.fracchrom import solve_chi_f
from vcgap.gap import gap_from_chi_f
from vcgap.graphs import cycle, mycielskian


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--steps", type=int, default=2, help="number of Mycielski steps")
    args = ap.parse_args()
    g = cycle(5)
    predicted = Fraction(5, 2)
    for step in range(args.steps + 1):
        start = time.perf_counter()
        chi = solve_chi_f(g)[0].value
        tag = "ok" if chi == predicted else "MISMATCH"
        print(f"step {step}: n={g.n:<3} chi_f={chi} rho={gap_from_chi_f(chi)} "
              f"recurrence={predicted} {tag} ({time.perf_counter() - start:.1f} s)")
        g = mycielskian(g)
        predicted = predicted + 1 / predicted


if __name__ == "__main__":
    main()
