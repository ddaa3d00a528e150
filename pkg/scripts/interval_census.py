"""Tally open intervals of the order poset by predicted homotopy type.

Usage: python scripts/interval_census.py --n 3
"""

import argparse
from collections import Counter

from omega_lattice.omega import Interval, frattini
from omega_lattice.relation import is_subrelation
from omega_lattice.verify import strict_pairs


def main() -> None:
    p = argparse.ArgumentParser()
    p.add_argument("--n", type=int, default=3)
    args = p.parse_args()
    tally = Counter()
    for r, s in strict_pairs(args.n):
        if is_subrelation(frattini(s), r):
            tally[f"sphere dim {Interval(r, s).gap() - 2}"] += 1
        else:
            tally["contractible"] += 1
    for key in sorted(tally):
        print(f"{key:<16} {tally[key]}")


if __name__ == "__main__":
    main()
