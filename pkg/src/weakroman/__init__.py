"""Exact computation for weak Roman domination and six related invariants,
constructors for lexicographic and corona products and the named graph
families, and a machine-checkable registry of identities and bounds."""

from .graph import (
    EdgeListFormatError,
    Graph,
    GraphError,
    UndefinedInvariantError,
    VertexSet,
    format_edge_list,
    is_2packing,
    is_dominating,
    is_double_total_dominating,
    is_secure_dominating,
    is_total_dominating,
    parse_edge_list,
)
from .generators import FamilySpec, generate, random_connected
from .products import ProductGraph, closed_copy_weight, copy_weight, corona, lexicographic
from .solvers import (
    FUNCTION_INVARIANTS,
    INVARIANTS,
    SET_INVARIANTS,
    BudgetExceededError,
    LegionFunction,
    SolveResult,
    SolverConfig,
    enumerate_optimal_wrdf,
    is_rdf,
    is_roman_graph,
    is_undefended,
    is_weak_roman_graph,
    is_wrdf,
    minimum_dominating_sets,
    oracle,
    satisfies_property_p,
    solve,
)
from .theorems import (
    REGISTRY,
    Claim,
    ClaimReport,
    ReducedGraph,
    closed_formula,
    find_P3_sets,
    find_P4_sets,
    reduce_P4,
    resolve_graph,
    summary_table,
    verify_all,
    verify_claim,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "Claim",
    "ClaimReport",
    "EdgeListFormatError",
    "FamilySpec",
    "FUNCTION_INVARIANTS",
    "Graph",
    "GraphError",
    "INVARIANTS",
    "LegionFunction",
    "ProductGraph",
    "REGISTRY",
    "ReducedGraph",
    "SET_INVARIANTS",
    "SolveResult",
    "SolverConfig",
    "UndefinedInvariantError",
    "VertexSet",
    "closed_copy_weight",
    "closed_formula",
    "copy_weight",
    "corona",
    "enumerate_optimal_wrdf",
    "find_P3_sets",
    "find_P4_sets",
    "format_edge_list",
    "generate",
    "is_2packing",
    "is_dominating",
    "is_double_total_dominating",
    "is_rdf",
    "is_roman_graph",
    "is_secure_dominating",
    "is_total_dominating",
    "is_undefended",
    "is_weak_roman_graph",
    "is_wrdf",
    "lexicographic",
    "minimum_dominating_sets",
    "oracle",
    "parse_edge_list",
    "random_connected",
    "reduce_P4",
    "resolve_graph",
    "satisfies_property_p",
    "solve",
    "summary_table",
    "verify_all",
    "verify_claim",
]
