// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Expected total runtime is a few minutes.

#include "distsum/colorer.hpp"
#include "distsum/generators.hpp"
#include "distsum/graph.hpp"
#include "distsum/oracle.hpp"
#include "distsum/verify.hpp"

#include <chrono>
#include <cmath>
#include <iostream>
#include <set>
#include <vector>

using namespace distsum;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << detail
              << std::endl;
    if (!ok) ++failures;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

std::vector<std::vector<int>> all_pairs_dist(const Graph& g) {
    const int inf = 1 << 28;
    int n = g.vertex_count();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    return d;
}

RunStats corpus_stats;  // accumulated by criterion 1, reused by criterion 7

void criterion1() {
    Timer timer;
    long long graphs = 0, bad = 0;
    for (int n = 3; n <= 8; ++n) {
        for (const Graph& g : all_connected(n)) {
            for (int r : {2, 3}) {
                ++graphs;
                RunStats stats;
                EdgeColoring c;
                try {
                    c = color_distinguishing(g, r, &stats);
                } catch (const std::exception& e) {
                    ++bad;
                    std::cout << "  construction failed (n=" << n << ", r=" << r
                              << "): " << e.what() << "\n";
                    continue;
                }
                corpus_stats.add(stats);
                VerificationReport report = verify(g, c, r);
                BoundParams p = bound_params(std::max(2, g.max_degree()), r);
                if (!report.ok() || report.max_color > p.palette_max ||
                    stats.infeasible_steps != 0 || stats.case_exhaustions != 0)
                    ++bad;
            }
        }
    }
    report(1, bad == 0,
           "constructive coloring verified on " + std::to_string(graphs) +
               " (graph, r) corpus runs, max color within 6K+delta, zero infeasible steps (" +
               std::to_string(timer.seconds()) + "s)");
}

void criterion2() {
    bool ok = true;
    for (long long delta = 2; delta <= 30; ++delta) {
        ok = ok && bound_params(delta, 2).palette_max == 13 * delta - 6;
        ok = ok && bound_params(delta, 3).palette_max == 6 * delta * delta + delta;
    }
    for (long long delta = 2; delta <= 12; ++delta)
        for (long long r = 4; r <= 8; ++r) {
            long long power = 1;
            for (long long i = 0; i + 1 < r; ++i) power *= delta;
            ok = ok && bound_params(delta, r).palette_max <= 6 * power;
        }
    report(2, ok, "palette identities 13*delta-6 (r=2), 6*delta^2+delta (r=3), <= 6*delta^(r-1)");
}

void criterion3() {
    Timer timer;
    bool ok = true;
    for (int delta = 2; delta <= 6; ++delta)
        for (int r : {2, 3}) {
            auto res = exact_index(star_graph(delta), r, 10);
            ok = ok && res.has_value() && res->k == delta;
        }
    report(3, ok, "stars are exactly delta (" + std::to_string(timer.seconds()) + "s)");
}

void criterion4() {
    Timer timer;
    long long checked = 0, bad = 0;
    for (int n = 3; n <= 6; ++n) {
        for (const Graph& g : all_connected(n)) {
            ++checked;
            BoundParams p = bound_params(std::max(2, g.max_degree()), 2);
            EdgeColoring constructive = color_distinguishing(g, 2);
            auto res = exact_index(g, 2, std::min<Color>(p.palette_max, 12));
            if (!res) {
                ++bad;
                continue;
            }
            if (res->k > constructive.max_color()) ++bad;
            if (!verify(g, res->witness, 2).ok()) ++bad;
        }
    }
    auto c4 = exact_index(cycle_graph(4), 2, 10);
    bool anchor = c4.has_value() && c4->k == 4;
    report(4, bad == 0 && anchor,
           "exact minimum found, dominated by the constructive coloring, witness verified on " +
               std::to_string(checked) + " graphs; exact(C_4, 2) = 4 (" +
               std::to_string(timer.seconds()) + "s)");
}

void criterion5() {
    Timer timer;
    bool ok = true;
    for (int n = 3; n <= 5; ++n)
        for (const Graph& g : all_connected(n))
            for (int r : {2, 3}) {
                auto proper = exact_index(g, r, 12);
                auto loose = exact_sr(g, r, 12);
                if (!proper || !loose || proper->k < loose->k) ok = false;
            }
    for (int r : {2, 3}) {
        Graph db = de_bruijn_undirected(2, r);
        auto dist = all_pairs_dist(db);
        for (int u = 0; u < db.vertex_count(); ++u)
            for (int v = 0; v < db.vertex_count(); ++v)
                if (dist[u][v] > r) ok = false;
        EdgeColoring c = color_distinguishing(db, r);
        VerificationReport report = verify(db, c, r);
        if (!report.ok()) ok = false;
        std::set<Color> sums;
        for (int v = 0; v < db.vertex_count(); ++v)
            if (!sums.insert(weighted_degree(db, c, v)).second) ok = false;
    }
    report(5, ok,
           "exact_index >= exact_sr on every completed instance; de Bruijn (2,2) and (2,3) have "
           "diameter <= r and pairwise distinct sums (" +
               std::to_string(timer.seconds()) + "s)");
}

void criterion6() {
    Timer timer;
    long long violations = 0;

    // Pipeline-level invariants on every corpus graph that reaches the main
    // construction directly (connected, no reduction applicable, not a star).
    for (int n = 4; n <= 8; ++n) {
        for (const Graph& g : all_connected(n)) {
            if (reduce_degree_two(g).has_value()) continue;
            bool is_star = g.edge_count() == n - 1 && g.max_degree() == n - 1;
            if (is_star) continue;
            for (int r : {2, 3}) {
                BoundParams params = bound_params(g.max_degree(), r);
                Ordering ord;
                try {
                    ord = build_ordering(g);
                } catch (const std::exception&) {
                    ++violations;
                    continue;
                }
                AlgoState state = initial_coloring(g, ord, params);
                run_main_phase(state, r);
                EdgeColoring c = finalize_root_pair(state, r);
                const Color two_k = 2 * params.k_val;

                // Mod-2K properness everywhere.
                for (int v = 0; v < g.vertex_count(); ++v) {
                    std::set<Color> residues;
                    for (int w : g.neighbors(v))
                        if (!residues.insert(c.get(g.edge_id(v, w)) % two_k).second)
                            ++violations;
                }
                // Reserved-pair discipline and disjointness among r-neighbors.
                int nn = static_cast<int>(ord.sequence.size());
                for (int i = 0; i + 2 < nn; ++i) {
                    int vi = ord.sequence[i];
                    PairSet di = state.pair_set(vi);
                    if (!di.valid() || !di.contains(weighted_degree(g, c, vi))) ++violations;
                    auto nbh = r_neighborhood(g, vi, r);
                    for (int l = 0; l < i; ++l) {
                        int vl = ord.sequence[l];
                        if (std::find(nbh.begin(), nbh.end(), vl) == nbh.end()) continue;
                        PairSet dl = state.pair_set(vl);
                        if (di.base == dl.base) ++violations;
                    }
                }
                // Edge budget: at most two touches, the root edge exactly one.
                int root_edge = g.edge_id(ord.root_pair.first, ord.root_pair.second);
                for (int e = 0; e < g.edge_count(); ++e) {
                    if (state.modification_count(e) > 2) ++violations;
                    if (e == root_edge && state.modification_count(e) != 1) ++violations;
                }
            }
        }
    }

    // Vizing bound over the corpus.
    for (int n = 2; n <= 7; ++n)
        for (const Graph& g : all_connected(n)) {
            EdgeColoring c = vizing_color(g);
            if (!verify(g, c, 1).proper) ++violations;
            if (c.max_color() > g.max_degree() + 1) ++violations;
        }

    // Verifier monotonicity in r on constructive colorings.
    for (int n = 3; n <= 6; ++n)
        for (const Graph& g : all_connected(n)) {
            EdgeColoring c = color_distinguishing(g, 3);
            if (!verify(g, c, 3).ok()) ++violations;
            if (!verify(g, c, 2).distinguishing) ++violations;
            if (!verify(g, c, 1).distinguishing) ++violations;
        }

    // d^r(v) <= d(v) * M over the corpus.
    for (int n = 2; n <= 8; ++n)
        for (const Graph& g : all_connected(n)) {
            if (g.max_degree() < 2) continue;
            for (int r : {2, 3}) {
                BoundParams p = bound_params(g.max_degree(), r);
                for (int v = 0; v < n; ++v)
                    if (static_cast<long long>(r_neighborhood(g, v, r).size()) >
                        g.degree(v) * p.m_quot)
                        ++violations;
            }
        }

    report(6, violations == 0,
           "property suites (mod-2K properness, reserved pairs, edge budget, Vizing bound, "
           "verifier monotonicity, d^r <= d*M): " +
               std::to_string(violations) + " violations (" + std::to_string(timer.seconds()) +
               "s)");
}

void criterion7() {
    Timer timer;
    RunStats stats = corpus_stats;  // corpus runs from criterion 1
    // Targeted corpus extensions: the third final-step branch needs denser
    // blocking than any graph on <= 8 vertices produces. These two graphs
    // (found by a deterministic sweep of random graphs up to n = 16) reach it.
    Graph reach3a = Graph::from_edge_list(
        8, {{0, 2}, {0, 4}, {0, 7}, {1, 5}, {2, 3}, {2, 4}, {4, 5}, {4, 7}, {5, 6}});
    Graph reach3b = Graph::from_edge_list(10, {{0, 2}, {0, 4}, {0, 5}, {0, 8}, {1, 2},
                                               {1, 3}, {1, 7}, {2, 6}, {3, 4}, {3, 6},
                                               {3, 7}, {4, 5}, {5, 9}, {6, 8}, {8, 9}});
    long long extension_failures = 0;
    for (const auto& [g, r] : std::vector<std::pair<const Graph*, int>>{
             {&reach3a, 4}, {&reach3b, 2}, {&reach3b, 3}}) {
        EdgeColoring c = color_distinguishing(*g, r, &stats);
        if (!verify(*g, c, r).ok()) ++extension_failures;
    }
    // A modest deterministic sweep keeps the rare-branch hunt honest.
    for (int n = 6; n <= 12; ++n)
        for (std::uint64_t seed = 1; seed <= 20; ++seed)
            for (double p : {0.25, 0.45})
                for (int r : {2, 3}) {
                    Graph g = random_graph(n, p, seed * 1009 + n);
                    if (!isolated_edge_components(g).empty()) continue;
                    color_distinguishing(g, r, &stats);
                }
    bool canaries = stats.infeasible_steps == 0 && stats.case_exhaustions == 0;
    std::string counts, unreached;
    for (size_t i = 0; i < stats.final_case_counts.size(); ++i) {
        counts += (i ? " " : "") + std::string("case") + std::to_string(i + 1) + "=" +
                  std::to_string(stats.final_case_counts[i]);
        if (stats.final_case_counts[i] == 0)
            unreached += (unreached.empty() ? "case" : ", case") + std::to_string(i + 1);
    }
    bool covered = extension_failures == 0 && stats.final_case_counts[0] > 0 &&
                   stats.final_case_counts[2] > 0 && stats.final_case_counts[4] > 0;
    std::string detail = "final-step branch counters: " + counts +
                         " (cases 1, 3, 5 reached; corpus extended with two documented graphs)";
    if (!unreached.empty())
        detail += "; recorded unreachable-at-small-n: " + unreached +
                  " (also recorded in the bench report)";
    detail += " (" + std::to_string(timer.seconds()) + "s)";
    report(7, canaries && covered, detail);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT") << std::endl;
    return failures == 0 ? 0 : 1;
}
