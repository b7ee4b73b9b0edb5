#include "distsum/generators.hpp"
#include "distsum/oracle.hpp"
#include "distsum/verify.hpp"

#include "doctest.h"

#include <stdexcept>
#include "test_helpers.hpp"

using namespace distsum;

TEST_CASE("exact_index on anchors") {
    auto star3 = exact_index(star_graph(3), 2, 10);
    REQUIRE(star3.has_value());
    CHECK(star3->k == 3);

    auto p3 = exact_index(path_graph(3), 1, 10);
    REQUIRE(p3.has_value());
    CHECK(p3->k == 2);
    Graph g = path_graph(3);
    CHECK(weighted_degree(g, p3->witness, 0) == 1);
    CHECK(weighted_degree(g, p3->witness, 1) == 3);
    CHECK(weighted_degree(g, p3->witness, 2) == 2);

    auto c4 = exact_index(cycle_graph(4), 2, 10);
    REQUIRE(c4.has_value());
    CHECK(c4->k == 4);
}

TEST_CASE("exact_sr drops properness") {
    auto r1 = exact_sr(path_graph(3), 1, 10);
    REQUIRE(r1.has_value());
    CHECK(r1->k == 1);

    auto r2 = exact_sr(path_graph(3), 2, 10);
    REQUIRE(r2.has_value());
    CHECK(r2->k == 2);
}

TEST_CASE("witnesses pass the verifier") {
    for (int n = 3; n <= 5; ++n)
        for (const Graph& g : all_connected(n))
            for (int r = 1; r <= 2; ++r) {
                auto res = exact_index(g, r, 12);
                REQUIRE(res.has_value());
                VerificationReport report = verify(g, res->witness, r);
                CHECK(report.ok());
                CHECK(report.max_color <= res->k);
            }
}

TEST_CASE("proper minimum dominates the non-proper minimum") {
    for (int n = 3; n <= 5; ++n)
        for (const Graph& g : all_connected(n))
            for (int r = 1; r <= 2; ++r) {
                auto proper = exact_index(g, r, 12);
                auto loose = exact_sr(g, r, 12);
                REQUIRE(proper.has_value());
                REQUIRE(loose.has_value());
                CHECK(proper->k >= loose->k);
            }
}

TEST_CASE("exact_index is monotone in the radius") {
    for (const Graph& g : all_connected(5)) {
        auto r1 = exact_index(g, 1, 12);
        auto r2 = exact_index(g, 2, 12);
        auto r3 = exact_index(g, 3, 12);
        REQUIRE(r1.has_value());
        REQUIRE(r2.has_value());
        REQUIRE(r3.has_value());
        CHECK(r1->k <= r2->k);
        CHECK(r2->k <= r3->k);
    }
}

TEST_CASE("pigeonhole floor when the diameter fits the radius") {
    for (int n = 3; n <= 5; ++n)
        for (const Graph& g : all_connected(n)) {
            int r = 3;
            if (testhelp::diameter(g) > r) continue;
            auto res = exact_sr(g, r, 12);
            REQUIRE(res.has_value());
            long long delta = g.max_degree();
            long long floor = (n + delta - 1) / delta - 1;
            CHECK(res->k >= floor);
        }
}

TEST_CASE("k_max caps the search") {
    // K_2 is rejected upfront; C_4 at r = 2 needs 4 colors, so k_max = 3 fails.
    CHECK_THROWS_AS(exact_index(path_graph(2), 1, 5), std::invalid_argument);
    CHECK_FALSE(exact_index(cycle_graph(4), 2, 3).has_value());
}

TEST_CASE("node budget reports out-of-budget instead of an answer") {
    SearchOptions options;
    options.proper = true;
    options.node_limit = 3;
    auto outcome = search_min_coloring(complete_graph(5), 2, 12, options);
    CHECK_FALSE(outcome.result.has_value());
    CHECK(outcome.out_of_budget);
}

TEST_CASE("empty graphs need one color vacuously") {
    Graph empty = Graph::from_edge_list(3, {});
    auto res = exact_index(empty, 2, 5);
    REQUIRE(res.has_value());
    CHECK(res->k == 1);
}
