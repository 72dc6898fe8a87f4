"""Mixed metric dimension of graphs with edge-disjoint cycles.

The library computes the exact mixed metric dimension of trees, unicyclic
graphs, and cacti from their block structure, constructs certified minimum
mixed metric generators, cross-validates everything against a definition-
level brute-force oracle, and probes the conjectured bound
mdim(G) <= L1(G) + 2 c(G) on random general graphs.
"""

from .conjecture import (
    CactusSpec,
    CampaignConfig,
    CampaignSummary,
    ConjectureRecord,
    ThreeConnectedReport,
    check_3connected,
    evaluate_conjecture,
    random_cactus,
    random_connected_graph,
    random_tree,
    run_campaign,
)
from .errors import (
    CycleExcludedError,
    DisconnectedError,
    DuplicateEdgeError,
    EmptySetError,
    GraphBuildError,
    InfeasibleEdgeCountError,
    InfeasibleError,
    InvalidSpecError,
    MixedMetricError,
    NotACactusError,
    ParseError,
    SelfLoopError,
    TooLargeError,
    TooSmallError,
    UnknownElementError,
    VertexOutOfRangeError,
)
from .exact import (
    BoundReport,
    CycleTerm,
    GeneratorCertificate,
    MdimReport,
    bound_report,
    build_min_generator,
    delta_count,
    mdim_exact,
)
from .graph import (
    Edge,
    Element,
    Graph,
    GraphStats,
    all_pairs_distances,
    build_graph,
    canonical_edge,
    element_distance,
    graph_stats,
)
from .oracle import (
    FailingPair,
    Profile,
    SearchResult,
    brute_force_mdim,
    element_order,
    element_profiles,
    forced_vertices,
    is_mixed_generator,
)
from .structure import (
    ActiveMark,
    CycleInfo,
    GraphClass,
    GraphClassTag,
    TvPartition,
    active_marks,
    augment_for_triple,
    biconnected_blocks,
    classify,
    extract_cycles,
    has_geodesic_triple,
    tv_partition,
)

__version__ = "0.1.0"

__all__ = [
    "ActiveMark", "BoundReport", "CactusSpec", "CampaignConfig", "CampaignSummary",
    "ConjectureRecord", "CycleExcludedError", "CycleInfo", "CycleTerm",
    "DisconnectedError", "DuplicateEdgeError", "Edge", "Element", "EmptySetError",
    "FailingPair", "GeneratorCertificate", "Graph", "GraphBuildError", "GraphClass",
    "GraphClassTag", "GraphStats", "InfeasibleEdgeCountError", "InfeasibleError",
    "InvalidSpecError", "MdimReport", "MixedMetricError", "NotACactusError",
    "ParseError", "Profile", "SearchResult", "SelfLoopError", "ThreeConnectedReport",
    "TooLargeError", "TooSmallError", "TvPartition", "UnknownElementError",
    "VertexOutOfRangeError", "active_marks", "all_pairs_distances",
    "augment_for_triple", "biconnected_blocks", "bound_report", "brute_force_mdim",
    "build_graph", "build_min_generator", "canonical_edge", "check_3connected",
    "classify", "delta_count", "element_distance", "element_order",
    "element_profiles", "evaluate_conjecture", "extract_cycles", "forced_vertices",
    "graph_stats", "has_geodesic_triple", "is_mixed_generator", "mdim_exact",
    "random_cactus", "random_connected_graph", "random_tree", "run_campaign",
    "tv_partition",
]
