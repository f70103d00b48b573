"""Extremal demand families and the triple partition they are built on."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from termpair.graph import DemandGraph, HostGraph


@dataclass(frozen=True)
class TriplePartition:
    n: int
    triples: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        flat = [v for t in self.triples for v in t]
        if sorted(flat) != list(range(self.n)) or any(len(set(t)) != 3 for t in self.triples):
            raise ValueError("triples must partition 0..n-1 into 3-sets")

    def index_of(self) -> list[int]:
        """Map each vertex to the index of its triple."""
        owner = [0] * self.n
        for i, t in enumerate(self.triples):
            for v in t:
                owner[v] = i
        return owner

    def relabel(self, perm: Sequence[int]) -> TriplePartition:
        return TriplePartition(self.n, tuple(tuple(perm[v] for v in t) for t in self.triples))


def _require_multiple_of_3(n: int) -> None:
    if n <= 0 or n % 3:
        raise ValueError(f"n must be a positive multiple of 3, got {n}")


def canonical_triples(n: int) -> TriplePartition:
    _require_multiple_of_3(n)
    return TriplePartition(n, tuple((3 * i, 3 * i + 1, 3 * i + 2) for i in range(n // 3)))


def one_factor_demand(n: int, q: int) -> DemandGraph:
    """Perfect matching ``{2i, 2i+1}`` with every edge taken ``q`` times."""
    if n <= 0 or n % 2:
        raise ValueError(f"n must be a positive even integer, got {n}")
    if q < 1:
        raise ValueError(f"q must be positive, got {q}")
    return DemandGraph(n, tuple((2 * i, 2 * i + 1, q) for i in range(n // 2)))


def triangle_demand(n: int, q: int) -> DemandGraph:
    """Disjoint triangles on the canonical triples, each edge with multiplicity q/2."""
    _require_multiple_of_3(n)
    if q < 2 or q % 2:
        raise ValueError(f"q must be a positive even integer, got {q}")
    half = q // 2
    edges = []
    for a, b, c in canonical_triples(n).triples:
        edges += [(a, b, half), (a, c, half), (b, c, half)]
    return DemandGraph(n, tuple(edges))


def bipartite_one_factor_demand(n: int, mult: int | None = None) -> DemandGraph:
    """Identity matching ``{i, n+i}`` across K_{n,n}, multiplicity ``n/3`` by default.

    ``mult`` overrides the multiplicity for experiments away from ``n/3``.
    """
    _require_multiple_of_3(n)
    m = n // 3 if mult is None else mult
    if m < 1:
        raise ValueError(f"multiplicity must be positive, got {m}")
    return DemandGraph(2 * n, tuple((i, n + i, m) for i in range(n)))


def random_permutation(n: int, seed: int) -> list[int]:
    perm = list(range(n))
    random.Random(seed).shuffle(perm)
    return perm


def side_preserving_permutation(a: int, b: int, seed: int) -> list[int]:
    """Seeded permutation of ``0..a+b-1`` that maps each bipartition side to itself."""
    rng = random.Random(seed)
    left, right = list(range(a)), list(range(a, a + b))
    rng.shuffle(left)
    rng.shuffle(right)
    return left + right


def relabel_host(host: HostGraph, perm: Sequence[int]) -> HostGraph:
    """Apply a vertex permutation; complete hosts are fixed by every permutation."""
    if host.kind == "complete":
        return host
    if host.kind == "bipartite":
        sides_kept = all((perm[v] < host.a) == (v < host.a) for v in range(host.n))
        if sides_kept:
            return host
    return HostGraph.explicit(host.n, [(perm[u], perm[v]) for u, v in host.edges()])


def relabel_instance(
    host: HostGraph, demand: DemandGraph, seed: int
) -> tuple[HostGraph, DemandGraph, list[int]]:
    """Seeded isomorphic copy of ``(host, demand)``; returns the permutation used."""
    if host.kind == "bipartite":
        perm = side_preserving_permutation(host.a, host.b, seed)
    else:
        perm = random_permutation(host.n, seed)
    return relabel_host(host, perm), demand.relabel(perm), perm
