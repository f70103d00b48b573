"""Cherry statistics of a triangle-family realization and the counting checks.

A *cherry* is a path of length 2.  For a demand instance inside triple
``T_i``:

* a length-1 path, or a cherry whose middle lies in ``T_i``, is a *short*
  realization;
* a cherry whose middle lies in ``T_j`` (j != i) adds one to ``beta[i]``,
  ``alpha[j]`` and ``pair_cherries[i][j]``.

All counts are per demand instance, so parallel copies count separately.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from termpair.bounds import cherry_lower_bound
from termpair.constructions import TriplePartition
from termpair.graph import DemandGraph, HostGraph, PathSystem, verify_realization


class NotATriangleDemand(ValueError):
    pass


@dataclass(frozen=True)
class CherryStats:
    t: int
    t2_inter: int
    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    pair_cherries: tuple[tuple[int, ...], ...]  # [i][j]: demand of T_i, middle in T_j
    short_realizations: int
    long_realizations: int  # inter-triple cherries and paths of length >= 3

    def as_dict(self) -> dict:
        return {
            "t": self.t,
            "t2_inter": self.t2_inter,
            "alpha": list(self.alpha),
            "beta": list(self.beta),
            "pair_cherries": [list(r) for r in self.pair_cherries],
            "short_realizations": self.short_realizations,
            "long_realizations": self.long_realizations,
        }


def classify_paths(
    demand: DemandGraph,
    triples: TriplePartition,
    paths: PathSystem,
    host: HostGraph | None = None,
) -> CherryStats:
    """Tally cherries per triple.

    ``paths`` is verified against ``host`` (K_n by default) first; an invalid
    realization raises :class:`ValueError`.
    """
    if triples.n != demand.n:
        raise ValueError("triple partition and demand disagree on n")
    report = verify_realization(host or HostGraph.complete(demand.n), demand, paths)
    if not report.valid:
        raise ValueError(f"not a valid realization: {sorted(report.kinds())}")
    instances = demand.instances()
    owner = triples.index_of()
    k = len(triples.triples)
    pair = [[0] * k for _ in range(k)]
    t = short = long_ = 0
    for (u, v, _), p in zip(instances, paths):
        if owner[u] != owner[v]:
            raise NotATriangleDemand(f"demand edge {(u, v)} crosses triples")
        i = owner[u]
        length = len(p) - 1
        if length == 2:
            t += 1
            j = owner[p[1]]
            if j == i:
                short += 1
            else:
                pair[i][j] += 1
                long_ += 1
        elif length == 1:
            short += 1
        else:
            long_ += 1
    alpha = tuple(sum(pair[j][i] for j in range(k)) for i in range(k))
    beta = tuple(sum(row) for row in pair)
    return CherryStats(
        t=t,
        t2_inter=sum(beta),
        alpha=alpha,
        beta=beta,
        pair_cherries=tuple(tuple(r) for r in pair),
        short_realizations=short,
        long_realizations=long_,
    )


@dataclass(frozen=True)
class CountingCheck:
    failed_assertions: tuple[str, ...]
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failed_assertions

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "failed_assertions": list(self.failed_assertions),
            "details": self.details,
        }


def check_counting_argument(stats: CherryStats, n: int, q: int) -> CountingCheck:
    """Assert the five counting facts on one concrete realization.

    These hold for every realization of ``triangle_demand(n, q)``, so a
    failure on verified input points at a bug, not at the mathematics.
    """
    failed = []
    k = len(stats.alpha)
    sum_ab = sum(stats.alpha) + sum(stats.beta)
    if sum_ab != 2 * stats.t2_inter:
        failed.append("double_count")

    if n > 0 and n % 3 == 0 and q >= 0 and q % 2 == 0:
        t_bound = cherry_lower_bound(n, q)
    else:
        t_bound = 0
    if stats.t < t_bound:
        failed.append("cherry_lower_bound")

    per_tri = [a + b for a, b in zip(stats.alpha, stats.beta)]
    pigeon = -(-sum_ab // k) if k else 0
    if max(per_tri, default=0) < pigeon:
        failed.append("pigeonhole")

    worst_pair = 0
    for i in range(k):
        for j in range(i + 1, k):
            worst_pair = max(worst_pair, stats.pair_cherries[i][j] + stats.pair_cherries[j][i])
    if worst_pair > 4:
        failed.append("pair_bound")

    if stats.short_realizations > n:
        failed.append("short_realizations")

    return CountingCheck(
        tuple(failed),
        {
            "sum_alpha_beta": sum_ab,
            "two_t2_inter": 2 * stats.t2_inter,
            "t": stats.t,
            "cherry_lower_bound": t_bound,
            "max_alpha_beta": max(per_tri, default=0),
            "pigeonhole_min": pigeon,
            "max_pair_cherries": worst_pair,
            "short_realizations": stats.short_realizations,
            "n": n,
        },
    )
