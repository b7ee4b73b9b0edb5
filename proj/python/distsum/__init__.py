"""Distance-constrained sum-distinguishing edge colorings.

Thin wrapper over the C++ core: graphs, the constructive colorer, the
independent verifier, the exact search, and the graph generators.
"""

from ._core import (
    BoundParams,
    Graph,
    VerificationReport,
    all_connected,
    bound_params,
    color_distinguishing,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    de_bruijn_undirected,
    exact_index,
    exact_sr,
    isomorphic,
    path_graph,
    r_neighborhood,
    random_graph,
    star_graph,
    validate_colorable,
    verify,
    vizing_color,
    weighted_degree,
)

__all__ = [
    "BoundParams",
    "Graph",
    "VerificationReport",
    "all_connected",
    "bound_params",
    "color_distinguishing",
    "complete_bipartite",
    "complete_graph",
    "cycle_graph",
    "de_bruijn_undirected",
    "exact_index",
    "exact_sr",
    "isomorphic",
    "path_graph",
    "r_neighborhood",
    "random_graph",
    "star_graph",
    "validate_colorable",
    "verify",
    "vizing_color",
    "weighted_degree",
]
