"""Parameter sweeps over the demand families.

Each ``(n, q)`` cell is decided independently: counting refutation first
(triangle family), then the greedy realizer, then exact search.  Rows come
out sorted by ``(family, n, q)`` whatever the degree of parallelism.
"""

from __future__ import annotations

import hashlib
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Iterable

from termpair import __version__
from termpair.analysis import check_counting_argument, classify_paths
from termpair.bounds import bounds_report, reference_lines, triangle_q_upper_bound
from termpair.constructions import (
    bipartite_one_factor_demand,
    canonical_triples,
    one_factor_demand,
    triangle_demand,
)
from termpair.graph import DemandGraph, HostGraph, PathSystem
from termpair.io import SCHEMA_VERSION
from termpair.solver import NOT_REALIZABLE, REALIZABLE, SolveConfig, decide_realizable, greedy_realize

FAMILIES = ("triangle", "one_factor", "bipartite_one_factor")

REFUTED = "refuted_by_counting"
INVALID = "invalid_input"


def family_instance(family: str, n: int, q: int | None) -> tuple[HostGraph, DemandGraph]:
    """Host and demand for one sweep cell; raises ValueError on bad parameters.

    For ``bipartite_one_factor`` the host is K_{n,n} and ``q`` is the matching
    multiplicity (``None`` means n/3).
    """
    if family == "triangle":
        if q is None:
            raise ValueError("triangle family needs q")
        return HostGraph.complete(n), triangle_demand(n, q)
    if family == "one_factor":
        if q is None:
            raise ValueError("one_factor family needs q")
        return HostGraph.complete(n), one_factor_demand(n, q)
    if family == "bipartite_one_factor":
        return HostGraph.bipartite(n, n), bipartite_one_factor_demand(n, q)
    raise ValueError(f"unknown family {family!r}")


def _frac(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator}


@dataclass
class SweepRow:
    family: str
    n: int
    q: int | None
    outcome: str
    nodes_explored: int = 0
    method: str | None = None
    path_len_bound: int | None = None
    t_observed: int | None = None
    counting_check_passed: bool | None = None
    bound_refs: dict = field(default_factory=dict)
    certificate: PathSystem | None = field(default=None, repr=False)

    def as_dict(self) -> dict:
        d = asdict(self)
        d.pop("certificate")
        return d


def _bound_refs(family: str, n: int) -> dict:
    refs = reference_lines(n)
    return {
        "q_triangle_ub": _frac(triangle_q_upper_bound(n)) if n % 3 == 0 and n > 0 else None,
        "cs_lower": refs["cs_lower"],
        "tpc_lower": _frac(refs["tpc_lower"]),
    }


def run_cell(family: str, n: int, q: int | None, cfg: SolveConfig, greedy_retries: int) -> SweepRow:
    row = SweepRow(family, n, q, INVALID, bound_refs=_bound_refs(family, n))
    try:
        host, demand = family_instance(family, n, q)
    except ValueError:
        return row
    if family == "triangle" and not bounds_report(n, q).feasible_by_counting:
        row.outcome, row.method = REFUTED, "counting"
        return row

    cert = greedy_realize(host, demand, seed=0, retries=greedy_retries) if greedy_retries else None
    if cert is not None:
        row.outcome, row.method = REALIZABLE, "greedy"
    else:
        res = decide_realizable(host, demand, cfg)
        row.nodes_explored = res.nodes_explored
        row.method = "search"
        row.outcome = REFUTED if res.refuted_by_counting else res.label
        if res.status == NOT_REALIZABLE and res.path_len_limited:
            row.path_len_bound = res.max_path_len
        cert = res.paths

    if cert is not None:
        row.certificate = cert
        row.t_observed = sum(1 for p in cert if len(p) == 3)
        if family == "triangle":
            stats = classify_paths(demand, canonical_triples(n), cert, host)
            row.counting_check_passed = check_counting_argument(stats, n, q).passed
    return row


def _run_cell_args(args) -> SweepRow:
    return run_cell(*args)


@dataclass
class SweepResult:
    rows: list[SweepRow]
    metadata: dict

    def to_json(self, include_timing: bool = True) -> dict:
        meta = dict(self.metadata)
        if not include_timing:
            meta.pop("wall_time", None)
        return {"schema": SCHEMA_VERSION, "metadata": meta, "rows": [r.as_dict() for r in self.rows]}

    def dumps(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_json(include_timing), indent=1, sort_keys=True) + "\n"


def config_hash(family: str, ns: list[int], qs: list[int] | None, cfg: SolveConfig, greedy_retries: int) -> str:
    doc = {
        "family": family,
        "n": ns,
        "q": qs,
        "cfg": asdict(cfg),
        "greedy_retries": greedy_retries,
        "version": __version__,
    }
    return hashlib.sha256(json.dumps(doc, sort_keys=True).encode()).hexdigest()[:16]


def sweep(
    family: str,
    n_range: Iterable[int],
    q_range: Iterable[int] | None,
    cfg: SolveConfig | None = None,
    greedy_retries: int = 256,
    jobs: int = 1,
) -> SweepResult:
    """Decide every ``(n, q)`` cell of a family.

    ``q_range`` may be ``None`` only for ``bipartite_one_factor`` (one cell
    per n with multiplicity n/3).  Invalid parameter combinations become
    ``invalid_input`` rows rather than errors; empty or unknown ranges raise.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    cfg = cfg or SolveConfig()
    ns = sorted(set(n_range))
    qs = sorted(set(q_range)) if q_range is not None else None
    if not ns or any(n < 1 for n in ns):
        raise ValueError("n range must be nonempty and positive")
    if qs is not None and (not qs or any(q < 1 for q in qs)):
        raise ValueError("q range must be nonempty and positive")
    if qs is None and family != "bipartite_one_factor":
        raise ValueError(f"{family} needs a q range")

    cells = [(family, n, q, cfg, greedy_retries) for n in ns for q in (qs or [None])]
    started = time.perf_counter()
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_run_cell_args, cells))
    else:
        rows = [run_cell(*c) for c in cells]
    return SweepResult(
        rows=rows,
        metadata={
            "toolkit_version": __version__,
            "config_hash": config_hash(family, ns, qs, cfg, greedy_retries),
            "wall_time": round(time.perf_counter() - started, 3),
        },
    )
