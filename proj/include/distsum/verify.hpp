#ifndef DISTSUM_VERIFY_HPP
#define DISTSUM_VERIFY_HPP

#include "distsum/coloring.hpp"
#include "distsum/graph.hpp"

#include <tuple>

namespace distsum {

/// d_c(v): sum of the colors on edges incident to v; 0 for isolated vertices.
Color weighted_degree(const Graph& g, const EdgeColoring& c, int v);

struct PropernessViolation {
    int vertex;
    std::pair<int, int> edge_a;
    std::pair<int, int> edge_b;
    auto operator<=>(const PropernessViolation&) const = default;
};

struct SumConflict {
    int u;
    int v;
    int distance;
    Color sum;
    auto operator<=>(const SumConflict&) const = default;
};

struct VerificationReport {
    bool proper = false;
    std::vector<PropernessViolation> properness_violations;
    bool distinguishing = false;
    std::vector<SumConflict> conflicts;
    Color max_color = 0;

    bool ok() const { return proper && distinguishing; }
};

/// Checks properness and r-distant sum distinguishing. Lists every violation,
/// sorted. Distances are recomputed here with plain BFS; this module shares
/// nothing with the colorer beyond the graph type.
VerificationReport verify(const Graph& g, const EdgeColoring& c, int r);

}  // namespace distsum

#endif
