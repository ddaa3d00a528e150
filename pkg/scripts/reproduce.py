"""Print enumeration counts and the verification table for n = 0..4.

Usage: python scripts/reproduce.py [--exhaustive]
"""

import argparse
import time

from omega_lattice.omega import enumerate_orders
from omega_lattice.verify import SUITES, run_suite


def main() -> None:
    p = argparse.ArgumentParser()
    p.add_argument("--exhaustive", action="store_true", help="full homology at n = 4")
    args = p.parse_args()

    print("n  orders")
    for n in range(6):
        print(f"{n}  {len(enumerate_orders(n))}")
    print()
    print(f"{'suite':<10} {'n':>2} {'checks':>7} {'fails':>5} {'complexes':>9} {'secs':>6}")
    for n in range(5):
        for suite in SUITES:
            t0 = time.perf_counter()
            rep = run_suite(n, suite, exhaustive=args.exhaustive)
            dt = time.perf_counter() - t0
            print(
                f"{suite:<10} {n:>2} {rep.checks_run:>7} {len(rep.failures):>5} "
                f"{rep.homology.complexes:>9} {dt:>6.1f}"
            )


if __name__ == "__main__":
    main()
