"""Realizability of the identity matching in K_{n,n} as its multiplicity grows.

Useful for poking at the one-factor threshold near n/3 on small n.

    python scripts/bipartite_multiplicity.py --n 3,6,9 --max-mult 4
"""

import argparse
import sys
from fractions import Fraction

from termpair.cli import parse_range
from termpair.solver import SolveConfig
from termpair.sweep import sweep


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", default="3,6,9")
    ap.add_argument("--max-mult", type=int, default=4)
    ap.add_argument("--node-budget", type=int, default=200_000)
    args = ap.parse_args(argv)

    result = sweep(
        "bipartite_one_factor",
        parse_range(args.n),
        range(1, args.max_mult + 1),
        SolveConfig(node_budget=args.node_budget),
    )
    for row in result.rows:
        print(f"n={row.n:>3} mult={row.q:>3} mult/n={str(Fraction(row.q, row.n)):>6}  {row.outcome}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
