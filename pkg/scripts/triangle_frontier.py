"""Sweep the triangle family and set each cell against the counting bounds.

    python scripts/triangle_frontier.py --n 3..18:3 --q 2..12:2 --out frontier.json
"""

import argparse
import json
import sys

from termpair.bounds import bounds_report
from termpair.cli import parse_range
from termpair.solver import SolveConfig
from termpair.sweep import sweep


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", default="3..15:3")
    ap.add_argument("--q", default="2..10:2")
    ap.add_argument("--node-budget", type=int, default=500_000)
    ap.add_argument("--greedy-retries", type=int, default=512)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out")
    args = ap.parse_args(argv)

    result = sweep(
        "triangle",
        parse_range(args.n),
        parse_range(args.q),
        SolveConfig(node_budget=args.node_budget),
        greedy_retries=args.greedy_retries,
        jobs=args.jobs,
    )
    print(f"{'n':>4} {'q':>4} {'q/n':>6} {'13n/27+1':>9} {'t2_min':>6} {'t_obs':>6}  outcome")
    for row in result.rows:
        if row.outcome == "invalid_input":
            continue
        rep = bounds_report(row.n, row.q)
        t_obs = "-" if row.t_observed is None else row.t_observed
        print(
            f"{row.n:>4} {row.q:>4} {row.q / row.n:>6.3f} {float(rep.q_max_triangle):>9.3f} "
            f"{rep.t_min_tight:>6} {t_obs:>6}  {row.outcome}"
        )
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(result.to_json(), fh, indent=1, sort_keys=True)
    return 0


if __name__ == "__main__":
    sys.exit(main())
