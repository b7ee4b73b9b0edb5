#ifndef DISTSUM_ORACLE_HPP
#define DISTSUM_ORACLE_HPP

#include "distsum/coloring.hpp"
#include "distsum/graph.hpp"

#include <optional>

namespace distsum {

struct OracleResult {
    Color k = 0;
    EdgeColoring witness;
};

/// Options for the backtracking search. `pairs` overrides the distance-r pair
/// derivation when non-null (used by the constructive base case); `forbidden`
/// gives per-vertex sums that the finished coloring must avoid. A negative
/// node limit means unlimited.
struct SearchOptions {
    bool proper = true;
    const std::vector<std::pair<int, int>>* pairs = nullptr;
    const std::vector<std::vector<Color>>* forbidden_sums = nullptr;
    long long node_limit = -1;
};

struct SearchOutcome {
    std::optional<OracleResult> result;
    bool out_of_budget = false;
};

/// Smallest k <= k_max admitting a coloring of g with colors in [1, k] whose
/// vertex sums differ on every required pair, by iterative deepening over k
/// with backtracking over edges (descending min endpoint degree, then edge
/// index). The witness is the lexicographically smallest in that edge order.
SearchOutcome search_min_coloring(const Graph& g, int r, Color k_max,
                                  const SearchOptions& options);

/// chi'_{Sigma,r}(g) capped at k_max: proper variant. Requires the graph to
/// have no isolated edge components.
std::optional<OracleResult> exact_index(const Graph& g, int r, Color k_max);

/// s_r(g): the same minimum without the properness requirement.
std::optional<OracleResult> exact_sr(const Graph& g, int r, Color k_max);

}  // namespace distsum

#endif
