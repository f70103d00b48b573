"""Text formats for demands and hosts, JSON for path systems.

Demand (``.dem``)::

    n m
    u v mult      (m lines, 0-indexed, u < v)

Host::

    complete n | bipartite a b | explicit n   followed, for explicit, by ``u v`` lines

Lines starting with ``#`` are comments.  Path systems are JSON documents
``{"schema": 1, "paths": [{"demand": [u, v], "copy": k, "path": [...]}]}``.
"""

from __future__ import annotations

import json
from pathlib import Path

from termpair.graph import DemandGraph, HostGraph, PathSystem

SCHEMA_VERSION = 1


class FormatError(ValueError):
    """Raised on malformed input files."""


def _content_lines(text: str) -> list[list[str]]:
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(line.split())
    return rows


def _ints(tokens: list[str], count: int, what: str) -> list[int]:
    if len(tokens) != count:
        raise FormatError(f"{what}: expected {count} fields, got {' '.join(tokens)!r}")
    try:
        return [int(t) for t in tokens]
    except ValueError as exc:
        raise FormatError(f"{what}: non-integer field in {' '.join(tokens)!r}") from exc


def parse_demand(text: str) -> DemandGraph:
    rows = _content_lines(text)
    if not rows:
        raise FormatError("empty demand file")
    n, m = _ints(rows[0], 2, "header")
    if len(rows) - 1 != m:
        raise FormatError(f"header announces {m} edges, found {len(rows) - 1}")
    edges = []
    for row in rows[1:]:
        u, v, mult = _ints(row, 3, "demand edge")
        if not u < v:
            raise FormatError(f"demand edge must have u < v, got {u} {v}")
        edges.append((u, v, mult))
    if len({(u, v) for u, v, _ in edges}) != len(edges):
        raise FormatError("repeated demand pair")
    try:
        return DemandGraph(n, tuple(edges))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def format_demand(demand: DemandGraph) -> str:
    lines = [f"{demand.n} {len(demand.edges)}"]
    lines += [f"{u} {v} {m}" for u, v, m in demand.edges]
    return "\n".join(lines) + "\n"


def parse_host(text: str) -> HostGraph:
    rows = _content_lines(text)
    if not rows:
        raise FormatError("empty host file")
    kind, *rest = rows[0]
    try:
        if kind == "complete":
            (n,) = _ints(rest, 1, "complete host")
            if len(rows) > 1:
                raise FormatError("complete host takes no edge lines")
            return HostGraph.complete(n)
        if kind == "bipartite":
            a, b = _ints(rest, 2, "bipartite host")
            if len(rows) > 1:
                raise FormatError("bipartite host takes no edge lines")
            return HostGraph.bipartite(a, b)
        if kind == "explicit":
            (n,) = _ints(rest, 1, "explicit host")
            return HostGraph.explicit(n, [_ints(r, 2, "host edge") for r in rows[1:]])
    except ValueError as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(str(exc)) from exc
    raise FormatError(f"unknown host kind {kind!r}")


def format_host(host: HostGraph) -> str:
    if host.kind == "complete":
        return f"complete {host.n}\n"
    if host.kind == "bipartite":
        return f"bipartite {host.a} {host.b}\n"
    lines = [f"explicit {host.n}"] + [f"{u} {v}" for u, v in host.edges()]
    return "\n".join(lines) + "\n"


def parse_host_arg(arg: str) -> HostGraph:
    """Accept ``complete:N``, ``bipartite:A,B`` or a path to a host file."""
    try:
        if arg.startswith("complete:"):
            return HostGraph.complete(int(arg.split(":", 1)[1]))
        if arg.startswith("bipartite:"):
            a, b = arg.split(":", 1)[1].split(",")
            return HostGraph.bipartite(int(a), int(b))
    except ValueError as exc:
        raise FormatError(f"bad host argument {arg!r}") from exc
    return parse_host(Path(arg).read_text(encoding="utf-8"))


def paths_to_json(demand: DemandGraph, paths: PathSystem) -> dict:
    instances = demand.instances()
    if len(instances) != len(paths):
        raise ValueError("path system does not match the demand's instance count")
    return {
        "schema": SCHEMA_VERSION,
        "paths": [
            {"demand": [u, v], "copy": k, "path": list(p)}
            for (u, v, k), p in zip(instances, paths.paths)
        ],
    }


def paths_from_json(doc: dict, demand: DemandGraph | None = None) -> PathSystem:
    """Read a path system; entries are placed by their ``(demand, copy)`` labels.

    With ``demand`` given, entries are ordered by the demand's canonical
    instance order; unknown or duplicate labels raise :class:`FormatError`.
    Without it, file order is kept.
    """
    try:
        entries = doc["paths"]
        rows = [(tuple(e["demand"]), int(e["copy"]), tuple(e["path"])) for e in entries]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed path system: {exc}") from exc
    if demand is None:
        return PathSystem(tuple(p for _, _, p in rows))
    slot = {(u, v, k): i for i, (u, v, k) in enumerate(demand.instances())}
    placed: dict[int, tuple[int, ...]] = {}
    for (u, v), k, p in rows:
        key = (min(u, v), max(u, v), k)
        if key not in slot:
            raise FormatError(f"path labelled {key} matches no demand instance")
        if slot[key] in placed:
            raise FormatError(f"duplicate path for instance {key}")
        placed[slot[key]] = p
    return PathSystem(tuple(placed[i] for i in sorted(placed)))


def read_demand(path: str | Path) -> DemandGraph:
    return parse_demand(Path(path).read_text(encoding="utf-8"))


def write_demand(path: str | Path, demand: DemandGraph) -> None:
    Path(path).write_text(format_demand(demand), encoding="utf-8")


def read_paths(path: str | Path, demand: DemandGraph | None = None) -> PathSystem:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON in {path}: {exc}") from exc
    return paths_from_json(doc, demand)


def write_paths(path: str | Path, demand: DemandGraph, paths: PathSystem) -> None:
    Path(path).write_text(json.dumps(paths_to_json(demand, paths), indent=1) + "\n", encoding="utf-8")
