"""Total domination in small simple graphs.

Minimal total dominating sets, uniform-size recognition, the size-2
packing-2 class with its four-step recipes, family realization, matching
reductions, and exhaustive desk-scale searches.
"""

from .errors import (
    CapabilityError,
    DominationUndefinedError,
    ParseError,
    RecipeValidationError,
    ValidationError,
)
from .graphs import (
    CANONICAL_BOUND,
    MAX_VERTICES,
    Graph,
    bipartition,
    canonical_form,
    canonical_key,
    delete_closed_neighborhood,
    diameter,
    girth,
    graph_from_canonical,
    induced_subgraph,
    is_connected,
    is_planar,
    is_triangle_free,
    iter_bits,
    mask_members,
    matching_number,
    max_matching_of_edges,
    vertex_mask,
)
from .graphio import EDGE_LIST, FORMATS, GRAPH6, parse_graph, serialize_graph
from .hypergraph import (
    SizeKDecision,
    SpernerFamily,
    all_minimal_transversals_have_size_k,
    enumerate_bounded_minimal_transversals,
    enumerate_minimal_transversals,
    greedy_minimize_transversal,
    is_transversal,
    minimize_family,
    neighborhood_hypergraph,
)
from .domination import (
    CORE_COMPLETE,
    CORE_MINIMAL_VALID,
    DominatingEdgeSubgraph,
    RealizedGraph,
    RecognitionResult,
    TotalDominationReport,
    dominating_edge_subgraph,
    is_minimal_tds,
    is_tds,
    minimal_vertex_covers,
    mtds,
    packing_number,
    realize_mtds,
    recognize_wtd_k,
    report,
)
from .wtd2 import (
    MVC_BUDGET,
    W2Membership,
    W2Recipe,
    construct_w2,
    parse_recipe,
    recognize_triangle_free_wtd2,
    serialize_recipe,
    w2_membership,
)
from .reduction import MatchingSelection, ReductionResult, reduce_by_matching
from .search import (
    ASSERTIONS,
    CatalogEntry,
    SearchFilter,
    classify,
    enumerate_graphs,
    resolve_assertion_ids,
    run_search,
)

__version__ = "0.1.0"

__all__ = [
    "CANONICAL_BOUND",
    "MAX_VERTICES",
    "MVC_BUDGET",
    "ASSERTIONS",
    "CORE_COMPLETE",
    "CORE_MINIMAL_VALID",
    "EDGE_LIST",
    "FORMATS",
    "GRAPH6",
    "CapabilityError",
    "CatalogEntry",
    "DominatingEdgeSubgraph",
    "DominationUndefinedError",
    "Graph",
    "MatchingSelection",
    "ParseError",
    "RealizedGraph",
    "RecipeValidationError",
    "RecognitionResult",
    "ReductionResult",
    "SearchFilter",
    "SizeKDecision",
    "SpernerFamily",
    "TotalDominationReport",
    "ValidationError",
    "W2Membership",
    "W2Recipe",
    "all_minimal_transversals_have_size_k",
    "bipartition",
    "canonical_form",
    "canonical_key",
    "classify",
    "construct_w2",
    "delete_closed_neighborhood",
    "diameter",
    "dominating_edge_subgraph",
    "enumerate_bounded_minimal_transversals",
    "enumerate_graphs",
    "enumerate_minimal_transversals",
    "girth",
    "graph_from_canonical",
    "greedy_minimize_transversal",
    "induced_subgraph",
    "is_connected",
    "is_minimal_tds",
    "is_planar",
    "is_tds",
    "is_transversal",
    "is_triangle_free",
    "iter_bits",
    "mask_members",
    "matching_number",
    "max_matching_of_edges",
    "minimal_vertex_covers",
    "minimize_family",
    "mtds",
    "neighborhood_hypergraph",
    "packing_number",
    "parse_graph",
    "parse_recipe",
    "realize_mtds",
    "recognize_triangle_free_wtd2",
    "recognize_wtd_k",
    "reduce_by_matching",
    "report",
    "resolve_assertion_ids",
    "run_search",
    "serialize_graph",
    "serialize_recipe",
    "vertex_mask",
    "w2_membership",
]
