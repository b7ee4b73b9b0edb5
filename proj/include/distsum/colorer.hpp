#ifndef DISTSUM_COLORER_HPP
#define DISTSUM_COLORER_HPP

#include "distsum/coloring.hpp"
#include "distsum/graph.hpp"

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>

namespace distsum {

/// Reserved sum pair D = {base, base + 2K}, drawn from the pairwise-disjoint
/// family whose bases satisfy base mod 4K in [0, 2K-1].
struct PairSet {
    Color base = -1;
    Color two_k = 0;

    Color high() const { return base + two_k; }
    bool contains(Color s) const { return s == base || s == high(); }
    bool valid() const { return base >= 0; }
};

/// BFS-derived processing order: sequence[i] is vertex v_{i+1}; the last two
/// entries form the root pair, processed jointly in the final step.
struct Ordering {
    std::vector<int> sequence;
    std::vector<int> parent;  // -1 for the root and for vertices outside the component
    std::pair<int, int> root_pair{-1, -1};  // (v_{n-1}, v_n)
};

/// Raised when a greedy step finds no admissible choice. The construction
/// proves this cannot happen, so any occurrence is a soundness canary; the
/// message carries a full state dump.
class InfeasibleStep : public std::runtime_error {
public:
    explicit InfeasibleStep(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when none of the five final-step cases applies (must be unreachable).
class CaseExhaustion : public std::runtime_error {
public:
    explicit CaseExhaustion(const std::string& what) : std::runtime_error(what) {}
};

/// Run instrumentation: final-step branch counters and invariant tallies.
struct RunStats {
    std::array<long long, 5> final_case_counts{};  // cases 1..5 at index 0..4
    long long main_pipelines = 0;
    long long reductions = 0;
    long long star_components = 0;
    long long base_case_components = 0;
    long long k2_components = 0;
    long long edge_second_modifications = 0;
    long long infeasible_steps = 0;   // raised InfeasibleStep count
    long long case_exhaustions = 0;   // raised CaseExhaustion count

    void add(const RunStats& other) {
        for (size_t i = 0; i < final_case_counts.size(); ++i)
            final_case_counts[i] += other.final_case_counts[i];
        main_pipelines += other.main_pipelines;
        reductions += other.reductions;
        star_components += other.star_components;
        base_case_components += other.base_case_components;
        k2_components += other.k2_components;
        edge_second_modifications += other.edge_second_modifications;
        infeasible_steps += other.infeasible_steps;
        case_exhaustions += other.case_exhaustions;
    }
};

/// Proper r-distant sum-distinguishing coloring with colors in [1, 6K+delta],
/// where the bound parameters come from each component's maximum degree.
/// Components are processed independently; stars get colors 1..delta, tiny
/// components go through the bounded exact search, everything else through
/// the degree-2 reduction and the main construction.
EdgeColoring color_distinguishing(const Graph& g, int r, RunStats* stats = nullptr);

/// Lowest-index vertex of degree 2 whose neighbors both have degree <= 3,
/// with its neighbors; empty when every degree-2 vertex has a neighbor of
/// degree >= 4.
std::optional<std::array<int, 3>> reduce_degree_two(const Graph& g);

/// Root-pair selection and BFS ordering for a connected non-star graph on
/// >= 4 vertices satisfying the degree-2 assumption.
Ordering build_ordering(const Graph& g);

/// Stepwise access to the main construction on one connected graph; compose
/// initial_coloring -> run_main_phase -> finalize_root_pair. The graph must
/// outlive the state.
class AlgoState {
public:
    const Ordering& ordering() const;
    const BoundParams& params() const;
    EdgeColoring coloring() const;
    PairSet pair_set(int v) const;          // invalid() when not yet assigned
    int modification_count(int edge_id) const;

    struct Impl;
    std::shared_ptr<Impl> impl;
};

AlgoState initial_coloring(const Graph& g, const Ordering& ord, const BoundParams& params);
void run_main_phase(AlgoState& state, int r);
EdgeColoring finalize_root_pair(AlgoState& state, int r);

/// Greedy two-edge extension after removing a degree-2 vertex v with
/// neighbors u1, u2: h_coloring must color exactly the edges of g - v.
EdgeColoring extend_after_reduction(const Graph& g, int v, int u1, int u2,
                                    const EdgeColoring& h_coloring, int r,
                                    const BoundParams& params);

}  // namespace distsum

#endif
