"""Core-periphery detection in hypergraphs."""

from ._hypercp import (
    Hypergraph,
    PowerIterationResult,
    SolverResult,
    UmhsResult,
    WeightedGraph,
    apply_F,
    borgatti_everett,
    clique_expansion,
    edge_probability,
    gamma,
    graph_nsm,
    hypernsm,
    intersection_profile,
    kendall_tau,
    mle_objective,
    mu_q,
    objective,
    profile,
    read_edge_list,
    sample,
    umhs,
)

__all__ = [
    "Hypergraph",
    "PowerIterationResult",
    "SolverResult",
    "UmhsResult",
    "WeightedGraph",
    "apply_F",
    "borgatti_everett",
    "clique_expansion",
    "edge_probability",
    "gamma",
    "graph_nsm",
    "hypernsm",
    "intersection_profile",
    "kendall_tau",
    "mle_objective",
    "mu_q",
    "objective",
    "profile",
    "read_edge_list",
    "sample",
    "umhs",
]
