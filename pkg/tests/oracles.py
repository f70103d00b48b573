"""Independent reference procedures used only by the test suite.

Nothing here imports the solver; these are deliberately naive.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import networkx as nx


def simple_paths_masks(n: int, edges: frozenset, s: int, t: int) -> list[int]:
    """Every simple s-t path in the host, as a bitmask over edge indices."""
    index = {e: i for i, e in enumerate(sorted(edges))}
    others = [w for w in range(n) if w not in (s, t)]
    out = []
    for k in range(len(others) + 1):
        for mid in itertools.permutations(others, k):
            seq = (s, *mid, t)
            mask = 0
            for x, y in zip(seq, seq[1:]):
                e = (min(x, y), max(x, y))
                if e not in index:
                    break
                mask |= 1 << index[e]
            else:
                out.append(mask)
    return out


@lru_cache(maxsize=None)
def _cands(n: int, edges: frozenset, s: int, t: int) -> tuple[int, ...]:
    return tuple(simple_paths_masks(n, edges, s, t))


def brute_force_realizable(n: int, edges: frozenset, instances: list[tuple[int, int]]) -> bool:
    """Try every combination of simple paths, one per instance, for edge-disjointness."""
    cands = [_cands(n, edges, s, t) for s, t in instances]

    def rec(i: int, used: int) -> bool:
        if i == len(cands):
            return True
        return any(not m & used and rec(i + 1, used | m) for m in cands[i])

    return rec(0, 0)


def small_hosts(max_n: int = 5):
    """One labelled representative of each simple graph on 1..max_n vertices."""
    for g in nx.graph_atlas_g():
        if 1 <= g.number_of_nodes() <= max_n:
            yield g.number_of_nodes(), frozenset((min(u, v), max(u, v)) for u, v in g.edges())


def small_demands(n: int, max_total: int = 6, max_mult: int = 3):
    """All demand multigraphs on n vertices with e(D) <= max_total, multiplicity <= max_mult."""
    pairs = list(itertools.combinations(range(n), 2))

    def rec(k: int, left: int, acc: list):
        if k == len(pairs):
            yield tuple(acc)
            return
        for m in range(min(max_mult, left) + 1):
            if m:
                acc.append((*pairs[k], m))
            yield from rec(k + 1, left - m, acc)
            if m:
                acc.pop()

    yield from rec(0, max_total, [])


def triangle_intra_inter_infeasible() -> bool:
    """No split of the 12 instances of triangle_demand(6, 4) fits K_6.

    ``s`` instances use a direct edge and ``c2`` a cherry inside their own
    triple; the 6 intra-triple edges bound ``s + 2*c2``, and every other
    instance leaves its triple and so takes two of the 9 inter-triple edges.
    """
    for s in range(13):
        for c2 in range(13 - s):
            if s + 2 * c2 <= 6 and 2 * (12 - s - c2) <= 9:
                return False
    return True


def cyclic_cherry_witness(n: int) -> list[tuple[int, ...]]:
    """Hand-built realization of triangle_demand(n, 4) in K_n for n = 3k, k >= 3.

    In triple i = (a, b, c) the first copy of every edge is direct, the second
    is a cherry through triple i+1 = (x, y, z) (cyclically): ab via x, ac via
    y, bc via z.  Paths are listed in canonical instance order.
    """
    k = n // 3
    assert n % 3 == 0 and k >= 3
    paths = []
    for i in range(k):
        a, b, c = 3 * i, 3 * i + 1, 3 * i + 2
        j = (i + 1) % k
        x, y, z = 3 * j, 3 * j + 1, 3 * j + 2
        paths += [(a, b), (a, x, b), (a, c), (a, y, c), (b, c), (b, z, c)]
    return paths
