#ifndef DISTSUM_GENERATORS_HPP
#define DISTSUM_GENERATORS_HPP

#include "distsum/graph.hpp"

#include <cstdint>

namespace distsum {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);

/// Erdos-Renyi G(n, p), reproducible from the seed (fixed pair order and a
/// fixed threshold scheme, independent of platform distributions).
Graph random_graph(int n, double p, std::uint64_t seed);

/// Undirected de Bruijn graph: vertices are length-r words over a d-letter
/// alphabet, adjacency by single-symbol shifts in either direction; loops
/// dropped, parallel adjacencies merged. Max degree <= 2d, diameter <= r.
Graph de_bruijn_undirected(int d, int r);

/// Every connected simple graph on n <= 8 vertices, one representative per
/// isomorphism class, in a fixed deterministic order.
std::vector<Graph> all_connected(int n);

/// Enumeration mode string echoed in reports.
inline constexpr const char* kAllConnectedMode =
    "isomorphism-reduced exhaustive enumeration (one labeled representative per class)";

/// Isomorphism test for small graphs (n <= 8), via canonical forms.
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace distsum

#endif
