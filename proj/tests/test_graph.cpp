#include "distsum/generators.hpp"
#include "distsum/graph.hpp"

#include "doctest.h"

#include <stdexcept>
#include "test_helpers.hpp"

#include <set>

using namespace distsum;

TEST_CASE("from_edge_list builds sorted adjacency") {
    Graph p3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
    CHECK(p3.degree(0) == 1);
    CHECK(p3.degree(1) == 2);
    CHECK(p3.degree(2) == 1);

    Graph k4 = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    for (int v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);
    CHECK(k4.edge_count() == 6);
    CHECK(k4.edge_id(2, 0) == k4.edge_id(0, 2));
}

TEST_CASE("from_edge_list rejects bad input naming the pair") {
    CHECK_THROWS_WITH_AS(Graph::from_edge_list(2, {{0, 1}, {0, 1}}),
                         doctest::Contains("duplicate edge: (0, 1)"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(Graph::from_edge_list(2, {{1, 1}}), doctest::Contains("self-loop"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(Graph::from_edge_list(2, {{0, 2}}), doctest::Contains("out of range"),
                         std::invalid_argument);
}

TEST_CASE("r_neighborhood on fixed shapes") {
    Graph p4 = path_graph(4);
    CHECK(r_neighborhood(p4, 0, 2) == std::vector<int>{1, 2});

    Graph k4 = complete_graph(4);
    CHECK(r_neighborhood(k4, 1, 1) == std::vector<int>{0, 2, 3});

    Graph c6 = cycle_graph(6);
    CHECK(r_neighborhood(c6, 0, 2) == std::vector<int>{1, 2, 4, 5});
    CHECK(r_neighborhood(c6, 0, 2).size() == 4);  // = M_{2,2} - 1
}

TEST_CASE("r_neighborhood matches the all-pairs oracle") {
    for (int n = 2; n <= 7; ++n)
        for (const Graph& g : all_connected(n)) {
            auto dist = testhelp::all_pairs_dist(g);
            for (int r = 1; r <= 4; ++r)
                for (int v = 0; v < n; ++v) {
                    std::vector<int> expect;
                    for (int u = 0; u < n; ++u)
                        if (u != v && dist[v][u] <= r) expect.push_back(u);
                    CHECK(r_neighborhood(g, v, r) == expect);
                }
        }
}

TEST_CASE("r_neighborhood radius-1 equals adjacency") {
    Graph g = random_graph(25, 0.2, 7);
    for (int v = 0; v < 25; ++v) CHECK(r_neighborhood(g, v, 1) == g.neighbors(v));
}

TEST_CASE("bound_params closed forms") {
    BoundParams p = bound_params(3, 2);
    CHECK(p.moore == 10);
    CHECK(p.m_quot == 3);
    CHECK(p.k_val == 5);
    CHECK(p.palette_max == 33);
    CHECK(p.palette_max == 13 * 3 - 6);

    p = bound_params(3, 3);
    CHECK(p.moore == 22);
    CHECK(p.m_quot == 7);
    CHECK(p.k_val == 9);
    CHECK(p.palette_max == 57);
    CHECK(p.palette_max == 6 * 9 + 3);

    p = bound_params(2, 4);
    CHECK(p.moore == 9);
    CHECK(p.m_quot == 4);
    CHECK(p.k_val == 5);
    CHECK(p.palette_max == 32);
    CHECK(p.palette_max <= 6 * 2 * 2 * 2);

    CHECK_THROWS_AS(bound_params(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(bound_params(3, 1), std::invalid_argument);
}

TEST_CASE("bound_params integrality and identities across a grid") {
    for (long long delta = 2; delta <= 30; ++delta)
        for (long long r = 2; r <= 8; ++r) {
            BoundParams p = bound_params(delta, r);
            CHECK((p.moore - 1) % delta == 0);
            CHECK(p.m_quot * delta == p.moore - 1);
            CHECK(p.k_val == p.m_quot + delta - 1);
            CHECK(p.palette_max == 6 * p.k_val + delta);
        }
}

TEST_CASE("neighborhood size never exceeds the Moore bound slack") {
    for (int n = 2; n <= 7; ++n)
        for (const Graph& g : all_connected(n)) {
            int delta = g.max_degree();
            if (delta < 2) continue;
            for (int r = 2; r <= 4; ++r) {
                BoundParams p = bound_params(delta, r);
                for (int v = 0; v < n; ++v) {
                    auto nbh = r_neighborhood(g, v, r);
                    CHECK(static_cast<long long>(nbh.size()) <= p.moore - 1);
                    CHECK(static_cast<long long>(nbh.size()) <= g.degree(v) * p.m_quot);
                }
            }
        }
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        Graph g = random_graph(40, 0.08, seed);
        int delta = g.max_degree();
        if (delta < 2) continue;
        BoundParams p = bound_params(delta, 3);
        for (int v = 0; v < g.vertex_count(); ++v) {
            auto nbh = r_neighborhood(g, v, 3);
            CHECK(static_cast<long long>(nbh.size()) <= p.moore - 1);
            CHECK(static_cast<long long>(nbh.size()) <= g.degree(v) * p.m_quot);
        }
    }
}

TEST_CASE("validate_colorable flags exactly the isolated edges") {
    CHECK_NOTHROW(validate_colorable(path_graph(3)));
    CHECK_THROWS_WITH_AS(validate_colorable(path_graph(2)), doctest::Contains("(0, 1)"),
                         std::invalid_argument);

    // K_2 on {0,1} plus a triangle {2,3,4}: only the K_2 is reported.
    Graph g = Graph::from_edge_list(5, {{0, 1}, {2, 3}, {3, 4}, {2, 4}});
    auto bad = isolated_edge_components(g);
    REQUIRE(bad.size() == 1);
    CHECK(bad[0] == std::pair<int, int>{0, 1});

    // Isolated vertices are fine.
    Graph h = Graph::from_edge_list(4, {{0, 1}, {1, 2}});
    CHECK_NOTHROW(validate_colorable(h));
}

TEST_CASE("connected_components are sorted by smallest member") {
    Graph g = Graph::from_edge_list(6, {{4, 5}, {0, 2}});
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 4);
    CHECK(comps[0] == std::vector<int>{0, 2});
    CHECK(comps[1] == std::vector<int>{1});
    CHECK(comps[2] == std::vector<int>{3});
    CHECK(comps[3] == std::vector<int>{4, 5});
}
