"""Command line entry point: ``termpair {gen,solve,verify,analyze,bounds,sweep}``.

Exit codes: 0 success / realizable / valid, 1 not realizable / invalid,
2 search budget exhausted, 64 usage error, 65 malformed input file,
70 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from termpair import __version__
from termpair.analysis import NotATriangleDemand, check_counting_argument, classify_paths
from termpair.bounds import bounds_report
from termpair.constructions import canonical_triples, relabel_instance
from termpair.graph import max_degree, verify_realization
from termpair.io import (
    SCHEMA_VERSION,
    FormatError,
    format_demand,
    parse_host_arg,
    read_demand,
    read_paths,
    write_paths,
)
from termpair.solver import EXHAUSTED, REALIZABLE, SolveConfig, decide_realizable, greedy_realize
from termpair.sweep import FAMILIES, family_instance, sweep

EX_OK, EX_NO, EX_EXHAUSTED = 0, 1, 2
EX_USAGE, EX_DATAERR, EX_SOFTWARE = 64, 65, 70


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def parse_range(text: str) -> list[int]:
    """``"3..9"``, ``"3..12:3"`` or ``"2,4,6"``."""
    try:
        if ".." in text:
            span, _, step = text.partition(":")
            lo, hi = span.split("..")
            return list(range(int(lo), int(hi) + 1, int(step) if step else 1))
        return [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"bad range {text!r}") from exc


def _emit(doc: dict, out=None) -> None:
    doc = {"schema": SCHEMA_VERSION, **doc}
    print(json.dumps(doc, indent=1, sort_keys=True), file=out or sys.stdout)


def _solve_exit(status: str) -> int:
    if status == REALIZABLE:
        return EX_OK
    if status == EXHAUSTED:
        return EX_EXHAUSTED
    return EX_NO


def cmd_gen(args) -> int:
    try:
        host, demand = family_instance(args.family, args.n, args.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.relabel is not None:
        _, demand, _ = relabel_instance(host, demand, args.relabel)
    text = format_demand(demand)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EX_OK


def cmd_solve(args) -> int:
    host = parse_host_arg(args.host)
    demand = read_demand(args.demand)
    if host.n != demand.n:
        raise UsageError(f"host has {host.n} vertices, demand has {demand.n}")
    try:
        cfg = SolveConfig(
            max_path_len=args.max_path_len,
            node_budget=args.node_budget,
            randomize=args.seed,
            time_limit=args.timeout,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc

    cert = greedy_realize(host, demand, seed=args.seed, retries=args.greedy_retries) if args.greedy_retries else None
    if cert is not None:
        doc = {"status": REALIZABLE, "label": REALIZABLE, "method": "greedy", "nodes_explored": 0}
        status = REALIZABLE
    else:
        res = decide_realizable(host, demand, cfg)
        doc = {**res.as_dict(), "method": "search", "elapsed": round(res.elapsed, 6)}
        status, cert = res.status, res.paths
    if cert is not None:
        doc["length_histogram"] = verify_realization(host, demand, cert).as_dict()["length_histogram"]
        if args.out:
            write_paths(args.out, demand, cert)
    if args.json:
        _emit(doc)
    else:
        print(f"{doc['label']}  (method={doc['method']}, nodes={doc['nodes_explored']})")
        if doc.get("refuted_by_counting"):
            print("refuted by edge counting before search")
    return _solve_exit(status)


def cmd_verify(args) -> int:
    host = parse_host_arg(args.host)
    demand = read_demand(args.demand)
    paths = read_paths(args.paths, demand)
    report = verify_realization(host, demand, paths)
    if args.json:
        _emit(report.as_dict())
    else:
        print("valid" if report.valid else "INVALID")
        for v in report.violations:
            print(f"  {v.kind}: instance={v.instance} pair={v.pair}")
        print("lengths:", dict(report.length_histogram))
    return EX_OK if report.valid else EX_NO


def cmd_analyze(args) -> int:
    demand = read_demand(args.demand)
    paths = read_paths(args.paths, demand)
    if demand.n % 3:
        raise FormatError("triangle analysis needs n divisible by 3")
    q = args.q if args.q is not None else max_degree(demand)
    try:
        stats = classify_paths(demand, canonical_triples(demand.n), paths)
    except NotATriangleDemand as exc:
        raise FormatError(str(exc)) from exc
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_NO
    check = check_counting_argument(stats, demand.n, q)
    if args.json:
        _emit({"n": demand.n, "q": q, "stats": stats.as_dict(), "check": check.as_dict()})
    else:
        for k, v in stats.as_dict().items():
            print(f"{k:>20}: {v}")
        print("counting argument:", "passed" if check.passed else f"FAILED {list(check.failed_assertions)}")
    if not check.passed:
        print(f"internal invariant breach: {list(check.failed_assertions)}", file=sys.stderr)
        return EX_SOFTWARE
    return EX_OK


def cmd_bounds(args) -> int:
    try:
        rep = bounds_report(args.n, args.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.json:
        _emit(rep.to_json())
    else:
        for k, v in rep.to_json().items():
            print(f"{k:>22}: {v}")
    return EX_OK


def cmd_sweep(args) -> int:
    ns = parse_range(args.n)
    qs = parse_range(args.q) if args.q else None
    try:
        cfg = SolveConfig(max_path_len=args.max_path_len, node_budget=args.node_budget)
        result = sweep(args.family, ns, qs, cfg, greedy_retries=args.greedy_retries, jobs=args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    text = result.dumps(include_timing=not args.no_timing)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    if args.json:
        sys.stdout.write(text)
    else:
        print(f"{'n':>4} {'q':>4}  {'outcome':<28} {'method':<8} {'nodes':>10} {'t':>4}")
        for r in result.rows:
            t = "" if r.t_observed is None else r.t_observed
            q = "" if r.q is None else r.q
            print(f"{r.n:>4} {q:>4}  {r.outcome:<28} {r.method or '':<8} {r.nodes_explored:>10} {t:>4}")
    if any(r.counting_check_passed is False for r in result.rows):
        print("internal invariant breach: counting check failed on a verified realization", file=sys.stderr)
        return EX_SOFTWARE
    return EX_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="termpair", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="write a family demand graph in .dem format")
    g.add_argument("--family", choices=FAMILIES, required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--q", type=int, help="max degree (bipartite: multiplicity, default n/3)")
    g.add_argument("--relabel", type=int, metavar="SEED", help="apply a seeded vertex permutation")
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="decide realizability")
    s.add_argument("--host", required=True, help="complete:N | bipartite:A,B | host file")
    s.add_argument("--demand", required=True)
    s.add_argument("--max-path-len", type=int)
    s.add_argument("--node-budget", type=int, default=SolveConfig.node_budget)
    s.add_argument("--timeout", type=float, help="wall-clock seconds; reported as exhausted")
    s.add_argument("--seed", type=int, help="randomize instance order / greedy retries")
    s.add_argument("--greedy-retries", type=int, default=0, help="try the greedy realizer first")
    s.add_argument("--out", help="write the certificate as JSON")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check a path system")
    v.add_argument("--host", required=True)
    v.add_argument("--demand", required=True)
    v.add_argument("--paths", required=True)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    a = sub.add_parser("analyze", help="cherry statistics of a triangle-family realization")
    a.add_argument("--demand", required=True)
    a.add_argument("--paths", required=True)
    a.add_argument("--q", type=int, help="defaults to the demand's max degree")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_analyze)

    b = sub.add_parser("bounds", help="counting bounds for triangle_demand(n, q)")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--q", type=int, required=True)
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_bounds)

    w = sub.add_parser("sweep", help="decide a grid of family instances")
    w.add_argument("--family", choices=FAMILIES, required=True)
    w.add_argument("--n", required=True, help='e.g. "3..12:3" or "3,6,9"')
    w.add_argument("--q", help='e.g. "2..6:2"; omit for bipartite (q = n/3)')
    w.add_argument("--max-path-len", type=int)
    w.add_argument("--node-budget", type=int, default=SolveConfig.node_budget)
    w.add_argument("--greedy-retries", type=int, default=256)
    w.add_argument("--jobs", type=int, default=1)
    w.add_argument("--out")
    w.add_argument("--no-timing", action="store_true", help="omit wall time for byte-stable output")
    w.add_argument("--json", action="store_true")
    w.set_defaults(func=cmd_sweep)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"termpair: error: {exc}", file=sys.stderr)
        return EX_USAGE
    except (FormatError, OSError) as exc:
        print(f"termpair: bad input: {exc}", file=sys.stderr)
        return EX_DATAERR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
