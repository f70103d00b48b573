"""Terminal-pairability toolkit for complete and complete-bipartite hosts."""

from termpair.graph import (
    DemandGraph,
    HostGraph,
    PathSystem,
    RealizationReport,
    Violation,
    host_edge_count,
    max_degree,
    verify_realization,
)
from termpair.constructions import (
    TriplePartition,
    bipartite_one_factor_demand,
    canonical_triples,
    one_factor_demand,
    triangle_demand,
)

__version__ = "0.1.0"

__all__ = [
    "DemandGraph",
    "HostGraph",
    "PathSystem",
    "RealizationReport",
    "TriplePartition",
    "Violation",
    "bipartite_one_factor_demand",
    "canonical_triples",
    "host_edge_count",
    "max_degree",
    "one_factor_demand",
    "triangle_demand",
    "verify_realization",
]
