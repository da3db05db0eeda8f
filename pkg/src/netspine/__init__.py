"""Irreducible spines, chordless cycle signatures and centers of
undirected networks."""

__version__ = "0.1.0"

from .centrality import (
    CentralityReport,
    ContainmentReport,
    DiameterEstimate,
    balance_conditions,
    betweenness,
    center_containment_check,
    centers,
    distance_sums,
    estimate_diameter,
    exact_diameter,
    raw_betweenness,
)
from .cycles import (
    Cycle,
    Signature,
    connective_complexity,
    enumerate_chordless_cycles,
    is_chordless,
    longest_cycle_intersection,
    signature,
)
from .estimators import ChordlessCycleSignature, NetworkAnalyzer, SpineReducer
from .graph import (
    UNREACHABLE,
    Graph,
    bfs_distances,
    closure,
    connected_components,
    induced_subgraph,
    neighborhood,
    region,
)
from .io import (
    AnalysisReport,
    parse_edge_list,
    read_report,
    write_dot,
    write_edge_list,
    write_report,
)
from .isomorphism import isomorphic
from .nodeset import NodeSet
from .reduction import (
    ReductionResult,
    SubsumptionEvent,
    is_irreducible,
    reduce_graph,
    subsumes,
)

__all__ = [
    "AnalysisReport",
    "CentralityReport",
    "ChordlessCycleSignature",
    "ContainmentReport",
    "Cycle",
    "DiameterEstimate",
    "Graph",
    "NetworkAnalyzer",
    "NodeSet",
    "ReductionResult",
    "Signature",
    "SpineReducer",
    "SubsumptionEvent",
    "UNREACHABLE",
    "balance_conditions",
    "betweenness",
    "bfs_distances",
    "center_containment_check",
    "centers",
    "closure",
    "connected_components",
    "connective_complexity",
    "distance_sums",
    "enumerate_chordless_cycles",
    "estimate_diameter",
    "exact_diameter",
    "induced_subgraph",
    "is_chordless",
    "is_irreducible",
    "isomorphic",
    "longest_cycle_intersection",
    "neighborhood",
    "parse_edge_list",
    "raw_betweenness",
    "read_report",
    "reduce_graph",
    "region",
    "signature",
    "subsumes",
    "write_dot",
    "write_edge_list",
    "write_report",
]
