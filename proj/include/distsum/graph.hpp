#ifndef DISTSUM_GRAPH_HPP
#define DISTSUM_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace distsum {

using VertexId = int;
using Color = long long;

/// Simple undirected graph with dense vertex ids 0..n-1.
/// Immutable after construction; adjacency lists sorted ascending.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Rejects out-of-range endpoints,
    /// self-loops and duplicate edges, naming the offending pair.
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Edges normalized to u < v, sorted lexicographically; index into this
    /// vector is the edge id used by EdgeColoring.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    int max_degree() const;

    /// Edge id for {u, v}, or -1 when absent.
    int edge_id(int u, int v) const;
    bool has_edge(int u, int v) const { return edge_id(u, v) >= 0; }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// N^r(v): all u != v within distance r, by truncated BFS.
std::vector<int> r_neighborhood(const Graph& g, int v, int r);

/// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Moore-bound quantities for a maximum degree and radius. All arithmetic is
/// exact; overflow raises instead of wrapping.
struct BoundParams {
    long long delta = 0;
    long long r = 0;
    long long moore = 0;        // 1 + delta + delta*(delta-1) + ... + delta*(delta-1)^(r-1)
    long long m_quot = 0;       // (moore - 1) / delta, always integral
    long long k_val = 0;        // m_quot + delta - 1
    long long palette_max = 0;  // 6*k_val + delta
};

BoundParams bound_params(long long delta, long long r);

/// Components that are a single edge (K_2) cannot carry a distinguishing
/// coloring; returns every such component as a (u, v) pair.
std::vector<std::pair<int, int>> isolated_edge_components(const Graph& g);

/// Throws std::invalid_argument listing each K_2 component, if any.
void validate_colorable(const Graph& g);

}  // namespace distsum

#endif
