"""Hosts, demand multigraphs, path systems and the realization verifier.

Vertices are dense integers ``0..n-1``.  Host edges have capacity one; a
demand entry ``(u, v, mult)`` stands for ``mult`` parallel demand edges, each
of which must be joined by its own host path.  All types are immutable.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

Pair = tuple[int, int]


def norm_pair(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class HostGraph:
    """Simple host graph.

    ``kind`` is ``"complete"``, ``"bipartite"`` or ``"explicit"``.  For the
    bipartite kind the left side is ``0..a-1`` and the right side
    ``a..a+b-1``.  Only explicit hosts store their edge set.
    """

    kind: str
    n: int
    a: int = 0
    b: int = 0
    edge_set: frozenset[Pair] = field(default=frozenset(), repr=False)

    def __post_init__(self) -> None:
        if self.kind not in ("complete", "bipartite", "explicit"):
            raise ValueError(f"unknown host kind {self.kind!r}")
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if self.kind == "bipartite" and self.a + self.b != self.n:
            raise ValueError("bipartite host needs n = a + b")
        if self.kind == "explicit":
            for u, v in self.edge_set:
                if not (0 <= u < v < self.n):
                    raise ValueError(f"bad host edge {(u, v)} for n={self.n}")

    @classmethod
    def complete(cls, n: int) -> HostGraph:
        return cls("complete", n)

    @classmethod
    def bipartite(cls, a: int, b: int) -> HostGraph:
        if a < 0 or b < 0:
            raise ValueError("side sizes must be nonnegative")
        return cls("bipartite", a + b, a, b)

    @classmethod
    def explicit(cls, n: int, edges: Iterable[Sequence[int]]) -> HostGraph:
        pairs = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            p = norm_pair(u, v)
            if p in pairs:
                raise ValueError(f"repeated host edge {p}")
            pairs.add(p)
        return cls("explicit", n, edge_set=frozenset(pairs))

    def has_edge(self, u: int, v: int) -> bool:
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            return False
        if self.kind == "complete":
            return True
        if self.kind == "bipartite":
            return (u < self.a) != (v < self.a)
        return norm_pair(u, v) in self.edge_set

    def edges(self) -> list[Pair]:
        """All host edges, sorted lexicographically."""
        if self.kind == "explicit":
            return sorted(self.edge_set)
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if self.has_edge(u, v)
        ]

    def spec(self) -> str:
        """Short textual form, as accepted by ``--host`` on the CLI."""
        if self.kind == "complete":
            return f"complete:{self.n}"
        if self.kind == "bipartite":
            return f"bipartite:{self.a},{self.b}"
        return f"explicit:{self.n}"


def host_edge_count(host: HostGraph) -> int:
    if host.kind == "complete":
        return host.n * (host.n - 1) // 2
    if host.kind == "bipartite":
        return host.a * host.b
    return len(host.edge_set)


@dataclass(frozen=True)
class DemandGraph:
    """Demand multigraph stored as normalized ``(u, v, mult)`` entries.

    Construction accepts duplicates and reversed pairs; they are merged so
    that entries are pair-unique, have ``u < v`` and are sorted.
    """

    n: int
    edges: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self) -> None:
        merged: Counter[Pair] = Counter()
        for entry in self.edges:
            u, v, mult = (int(x) for x in entry)
            if u == v:
                raise ValueError(f"demand loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"demand edge {(u, v)} out of range for n={self.n}")
            if mult < 1:
                raise ValueError(f"multiplicity must be positive, got {mult}")
            merged[norm_pair(u, v)] += mult
        object.__setattr__(
            self, "edges", tuple((u, v, m) for (u, v), m in sorted(merged.items()))
        )

    @property
    def num_edges(self) -> int:
        """e(D): the number of demand edges counted with multiplicity."""
        return sum(m for _, _, m in self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v, m in self.edges:
            deg[u] += m
            deg[v] += m
        return deg

    def instances(self) -> list[tuple[int, int, int]]:
        """Demand edge instances ``(u, v, copy)`` in canonical order."""
        return [(u, v, k) for u, v, m in self.edges for k in range(m)]

    def relabel(self, perm: Sequence[int]) -> DemandGraph:
        return DemandGraph(self.n, tuple((perm[u], perm[v], m) for u, v, m in self.edges))


def max_degree(demand: DemandGraph) -> int:
    return max(demand.degrees(), default=0)


@dataclass(frozen=True)
class PathSystem:
    """One host path per demand instance, in canonical instance order."""

    paths: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "paths", tuple(tuple(int(w) for w in p) for p in self.paths))

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.paths)

    def lengths(self) -> list[int]:
        return [len(p) - 1 for p in self.paths]


@dataclass(frozen=True)
class Violation:
    kind: str
    instance: int | None = None
    pair: Pair | None = None

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "instance": self.instance,
            "pair": list(self.pair) if self.pair is not None else None,
        }


VIOLATION_KINDS = (
    "endpoint_mismatch",
    "non_host_edge",
    "edge_reused",
    "instance_count_mismatch",
    "repeated_vertex",
)


@dataclass(frozen=True)
class RealizationReport:
    violations: tuple[Violation, ...]
    length_histogram: dict[int, int]

    @property
    def valid(self) -> bool:
        return not self.violations

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}

    def as_dict(self) -> dict:
        return {
            "valid": self.valid,
            "violations": [v.as_dict() for v in self.violations],
            "length_histogram": {str(k): c for k, c in sorted(self.length_histogram.items())},
        }


def _match_instances(
    instances: list[tuple[int, int, int]], paths: PathSystem
) -> list[Pair | None]:
    """Demand pair each path answers for, ``None`` when it answers for none.

    With matching counts the correspondence is positional.  Otherwise each
    path claims the first unclaimed instance with its endpoint pair, so one
    missing or extra path does not shift the blame onto its neighbours.
    """
    if len(paths) == len(instances):
        return [
            (u, v) if len(p) >= 2 and {p[0], p[-1]} == {u, v} else None
            for (u, v, _), p in zip(instances, paths.paths)
        ]
    open_count = Counter((u, v) for u, v, _ in instances)
    out: list[Pair | None] = []
    for p in paths.paths:
        key = norm_pair(p[0], p[-1]) if len(p) >= 2 else None
        if key is not None and open_count[key] > 0:
            open_count[key] -= 1
            out.append(key)
        else:
            out.append(None)
    return out


def verify_realization(
    host: HostGraph, demand: DemandGraph, paths: PathSystem
) -> RealizationReport:
    """Check that ``paths`` is an edge-disjoint realization of ``demand`` in ``host``.

    Never raises on bad certificates; every problem becomes a violation.
    Paths are matched to instances positionally when the counts agree.  Path lengths enter the histogram only for paths whose every step is a
    host edge.
    """
    violations: list[Violation] = []
    hist: Counter[int] = Counter()
    instances = demand.instances()
    if host.n != demand.n:
        violations.append(Violation("instance_count_mismatch", None, None))
    if len(paths) != len(instances):
        violations.append(Violation("instance_count_mismatch", None, None))

    positional = len(paths) == len(instances)
    used: dict[Pair, int] = {}
    for idx, path, inst in zip(range(len(paths)), paths.paths, _match_instances(instances, paths)):
        if inst is None:
            expected = instances[idx][:2] if positional else None
            violations.append(Violation("endpoint_mismatch", idx, expected))
        if len(set(path)) != len(path):
            violations.append(Violation("repeated_vertex", idx, None))
        well_formed = len(path) >= 2
        seen_here: set[Pair] = set()
        for x, y in zip(path, path[1:]):
            pair = norm_pair(x, y)
            if not host.has_edge(x, y):
                violations.append(Violation("non_host_edge", idx, pair))
                well_formed = False
                continue
            if pair in seen_here:
                violations.append(Violation("edge_reused", idx, pair))
                continue
            seen_here.add(pair)
            if pair in used:
                violations.append(Violation("edge_reused", idx, pair))
            else:
                used[pair] = idx
        if well_formed:
            hist[len(path) - 1] += 1
    return RealizationReport(tuple(violations), dict(sorted(hist.items())))
