"""Exact backtracking decision procedure and a greedy realizer.

The exact search routes demand instances one at a time in canonical order.
For each instance it tries simple paths in the residual host graph by
increasing length, then lexicographic vertex sequence, and backtracks on
dead ends.  Copies of the same demand pair are interchangeable, so their
paths are forced into strictly increasing (length, sequence) order.
Residual states already shown to fail are remembered and skipped.

A node is pruned when the unrouted instances provably cannot fit:

* every unrouted instance needs at least one residual edge, and at least two
  unless it is the first remaining copy of its pair and the direct edge is
  still free; copies after a routed copy of length L need at least
  ``max(L, 2)`` edges;
* each vertex needs at least as many residual edges as unrouted instances
  ending at it, and every interior visit to a vertex takes two of the edges
  left over; the interior visits available must cover the edges the lower
  bound asks for beyond one per instance.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Iterator

from termpair.graph import DemandGraph, HostGraph, PathSystem, verify_realization

REALIZABLE = "realizable"
NOT_REALIZABLE = "not_realizable"
EXHAUSTED = "exhausted"

# failed residual states remembered per search; bounds memory, not correctness
DEAD_STATE_CAP = 1 << 20


@dataclass(frozen=True)
class SolveConfig:
    max_path_len: int | None = None  # None: n - 1, i.e. unrestricted
    node_budget: int = 50_000_000
    use_counting_prune: bool = True
    randomize: int | None = None
    time_limit: float | None = None  # seconds; hitting it reports EXHAUSTED

    def __post_init__(self) -> None:
        if self.max_path_len is not None and self.max_path_len < 1:
            raise ValueError("max_path_len must be >= 1")
        if self.node_budget < 1:
            raise ValueError("node_budget must be >= 1")


@dataclass(frozen=True)
class SolveOutcome:
    status: str
    nodes_explored: int
    elapsed: float = field(compare=False)
    paths: PathSystem | None = None
    search_exhausted: bool = False
    refuted_by_counting: bool = False
    budget_hit: bool = False
    max_path_len: int = 0
    path_len_limited: bool = False

    @property
    def label(self) -> str:
        """Outcome label; bounded-length refutations are never plain ``not_realizable``."""
        if self.status == NOT_REALIZABLE and self.path_len_limited:
            return f"not_realizable_len_le_{self.max_path_len}"
        return self.status

    def as_dict(self) -> dict:
        return {
            "status": self.status,
            "label": self.label,
            "nodes_explored": self.nodes_explored,
            "search_exhausted": self.search_exhausted,
            "refuted_by_counting": self.refuted_by_counting,
            "budget_hit": self.budget_hit,
            "max_path_len": self.max_path_len,
            "path_len_limited": self.path_len_limited,
        }


class _BudgetHit(Exception):
    pass


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _adjacency(host: HostGraph) -> list[int]:
    adj = [0] * host.n
    for u, v in host.edges():
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


class _Search:
    def __init__(self, host: HostGraph, demand: DemandGraph, cfg: SolveConfig) -> None:
        self.n = host.n
        self.adj = _adjacency(host)
        self.res_edges = sum(bin(m).count("1") for m in self.adj) // 2
        self.max_len = min(cfg.max_path_len or max(self.n - 1, 1), max(self.n - 1, 1))
        self.cfg = cfg
        self.prune = cfg.use_counting_prune

        groups = list(demand.edges)
        if cfg.randomize is not None:
            random.Random(cfg.randomize).shuffle(groups)
        self.groups = groups
        self.inst: list[tuple[int, int]] = []
        self.group_of: list[int] = []
        self.group_start: list[int] = []
        for g, (u, v, m) in enumerate(groups):
            self.group_start.append(len(self.inst))
            for _ in range(m):
                self.inst.append((u, v))
                self.group_of.append(g)
        self.rem_deg = [0] * self.n
        for u, v in self.inst:
            self.rem_deg[u] += 1
            self.rem_deg[v] += 1
        self.chosen: list[tuple[int, ...]] = []
        self.dead: set[tuple] = set()
        self.nodes = 0
        self.deadline = None if cfg.time_limit is None else time.monotonic() + cfg.time_limit

    # -- pruning ---------------------------------------------------------

    def lower_bound(self, i: int) -> int:
        """Residual edges the instances ``i..`` need at minimum."""
        if i >= len(self.inst):
            return 0
        adj = self.adj
        g0 = self.group_of[i]
        total = 0
        for g in range(g0, len(self.groups)):
            u, v, m = self.groups[g]
            start = self.group_start[g]
            left = start + m - i if g == g0 else m
            if g == g0 and i > start:
                prev = len(self.chosen[i - 1]) - 1
                total += left * max(prev, 2)
            elif adj[u] >> v & 1:
                total += 2 * left - 1
            else:
                total += 2 * left
        return total

    def fits(self, i: int) -> bool:
        """Counting test for the unrouted instances ``i..``."""
        need = self.lower_bound(i)
        if need > self.res_edges:
            return False
        adj, rem = self.adj, self.rem_deg
        through = 0
        for w in range(self.n):
            spare = bin(adj[w]).count("1") - rem[w]
            if spare < 0:
                return False
            through += spare >> 1
        # each edge beyond the first on a path puts one interior vertex on it
        return need - (len(self.inst) - i) <= through

    # -- path enumeration ------------------------------------------------

    def _paths_of_length(self, s: int, t: int, length: int) -> Iterator[tuple[int, ...]]:
        adj = self.adj
        path = [s]
        tbit = 1 << t

        def extend(cur: int, visited: int, steps: int):
            if steps == 1:
                if adj[cur] & tbit:
                    yield tuple(path) + (t,)
                return
            for w in _bits(adj[cur] & ~visited & ~tbit):
                if steps == 2 and not adj[w] & tbit:
                    continue
                path.append(w)
                yield from extend(w, visited | (1 << w), steps - 1)
                path.pop()

        yield from extend(s, 1 << s, length)

    def candidate_paths(self, i: int) -> Iterator[tuple[int, ...]]:
        s, t = self.inst[i]
        lo, floor = 1, None
        g = self.group_of[i]
        if i > self.group_start[g]:
            floor = self.chosen[i - 1]
            lo = len(floor) - 1
        for length in range(lo, self.max_len + 1):
            for p in self._paths_of_length(s, t, length):
                if floor is not None and len(p) == len(floor) and p <= floor:
                    continue
                yield p

    # -- search ----------------------------------------------------------

    def _apply(self, p: tuple[int, ...], sign: int) -> None:
        adj = self.adj
        for x, y in zip(p, p[1:]):
            if sign < 0:
                adj[x] &= ~(1 << y)
                adj[y] &= ~(1 << x)
            else:
                adj[x] |= 1 << y
                adj[y] |= 1 << x
        self.res_edges += sign * (len(p) - 1)
        self.rem_deg[p[0]] += sign
        self.rem_deg[p[-1]] += sign

    def _state(self, i: int) -> tuple:
        floor = self.chosen[i - 1] if i > self.group_start[self.group_of[i]] else None
        return (i, floor, tuple(self.adj))

    def solve(self, i: int = 0) -> bool:
        if i == len(self.inst):
            return True
        state = self._state(i)
        if state in self.dead:
            return False
        for p in self.candidate_paths(i):
            self.nodes += 1
            if self.nodes > self.cfg.node_budget:
                raise _BudgetHit
            if self.deadline is not None and self.nodes & 0x3FF == 0 and time.monotonic() > self.deadline:
                raise _BudgetHit
            self._apply(p, -1)
            self.chosen.append(p)
            ok = not self.prune or self.fits(i + 1)
            if ok and self.solve(i + 1):
                return True
            self.chosen.pop()
            self._apply(p, +1)
        if len(self.dead) < DEAD_STATE_CAP:
            self.dead.add(state)
        return False

    def certificate(self) -> PathSystem:
        """Chosen paths re-ordered into the demand's canonical instance order."""
        by_group: dict[tuple[int, int], list[tuple[int, ...]]] = {}
        for (u, v), p in zip(self.inst, self.chosen):
            by_group.setdefault((u, v), []).append(p)
        out = []
        for u, v, _ in sorted(self.groups):
            out.extend(by_group[(u, v)])
        return PathSystem(tuple(out))


def decide_realizable(
    host: HostGraph, demand: DemandGraph, cfg: SolveConfig | None = None
) -> SolveOutcome:
    """Decide whether ``host`` realizes ``demand`` by edge-disjoint simple paths.

    ``EXHAUSTED`` is returned when the node budget or time limit runs out;
    that is never reported as a refutation.  A ``NOT_REALIZABLE`` outcome
    with ``path_len_limited`` set only rules out paths up to ``max_path_len``.
    """
    cfg = cfg or SolveConfig()
    if host.n != demand.n:
        raise ValueError(f"host has {host.n} vertices, demand has {demand.n}")
    started = time.perf_counter()
    search = _Search(host, demand, cfg)
    limited = search.max_len < host.n - 1

    def outcome(status: str, **kw) -> SolveOutcome:
        return SolveOutcome(
            status=status,
            nodes_explored=search.nodes,
            elapsed=time.perf_counter() - started,
            max_path_len=search.max_len,
            path_len_limited=limited and status == NOT_REALIZABLE,
            **kw,
        )

    if cfg.use_counting_prune and not search.fits(0):
        return outcome(NOT_REALIZABLE, refuted_by_counting=True)
    try:
        found = search.solve()
    except _BudgetHit:
        return outcome(EXHAUSTED, budget_hit=True)
    if not found:
        return outcome(NOT_REALIZABLE, search_exhausted=True)
    cert = search.certificate()
    report = verify_realization(host, demand, cert)
    if not report.valid:
        raise AssertionError(f"solver produced an invalid certificate: {report.violations}")
    return outcome(REALIZABLE, paths=cert)


# -- greedy ---------------------------------------------------------------


def _shortest_path(adj: list[int], s: int, t: int) -> tuple[int, ...] | None:
    """BFS shortest path; ties broken toward smaller vertices."""
    parent = {s: -1}
    frontier = [s]
    while frontier and t not in parent:
        nxt = []
        for x in frontier:
            for w in _bits(adj[x]):
                if w not in parent:
                    parent[w] = x
                    nxt.append(w)
        frontier = nxt
    if t not in parent:
        return None
    out = [t]
    while out[-1] != s:
        out.append(parent[out[-1]])
    return tuple(reversed(out))


def _greedy_once(host: HostGraph, order: list[int], inst: list[tuple[int, int]]) -> list | None:
    adj = _adjacency(host)
    pending = [0] * host.n
    for u, v in inst:
        pending[u] += 1
        pending[v] += 1
    routed: list[tuple[int, ...] | None] = [None] * len(inst)

    def take(idx: int, p: tuple[int, ...]) -> None:
        for x, y in zip(p, p[1:]):
            adj[x] &= ~(1 << y)
            adj[y] &= ~(1 << x)
        pending[p[0]] -= 1
        pending[p[-1]] -= 1
        routed[idx] = p

    for idx in order:
        u, v = inst[idx]
        if adj[u] >> v & 1:
            take(idx, (u, v))
    for idx in order:
        if routed[idx] is not None:
            continue
        u, v = inst[idx]
        best, best_slack = None, None
        for m in _bits(adj[u] & adj[v]):
            # slack: residual degree the middle keeps beyond its own pending demand
            slack = bin(adj[m]).count("1") - 2 - pending[m]
            if best_slack is None or slack > best_slack:
                best, best_slack = m, slack
        if best is not None:
            take(idx, (u, best, v))
    for idx in order:
        if routed[idx] is not None:
            continue
        p = _shortest_path(adj, *inst[idx])
        if p is None:
            return None
        take(idx, p)
    return routed


def greedy_realize(
    host: HostGraph, demand: DemandGraph, seed: int | None = None, retries: int = 32
) -> PathSystem | None:
    """Direct edges first, then cherries, then shortest residual paths.

    The first attempt uses canonical instance order; later attempts shuffle
    the order with ``random.Random(seed)``.  Returns ``None`` rather than an
    unverified certificate.
    """
    if host.n != demand.n:
        raise ValueError(f"host has {host.n} vertices, demand has {demand.n}")
    inst = [(u, v) for u, v, _ in demand.instances()]
    rng = random.Random(0 if seed is None else seed)
    order = list(range(len(inst)))
    for attempt in range(max(retries, 1)):
        if attempt:
            rng.shuffle(order)
        routed = _greedy_once(host, order, inst)
        if routed is None:
            continue
        cert = PathSystem(tuple(routed))
        if verify_realization(host, demand, cert).valid:
            return cert
    return None
