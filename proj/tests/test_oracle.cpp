#include "doctest.h"
#include "hamlink/oracle.hpp"
#include "hamlink/rng.hpp"
#include "support/builders.hpp"
#include "support/enumerate.hpp"

using namespace hamlink;
using namespace hamlink::testing;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("linkage witnesses on small instances") {
    // Complete graph: any pair extends to a Hamiltonian path.
    auto w = oracle_linkage({complete_graph(4), {{0, 1}}}, true);
    REQUIRE(w);
    CHECK(linkage_is_valid(complete_graph(4), {{0, 1}}, *w, true));

    // Opposite vertices of a 4-cycle do not admit a Hamiltonian path.
    CHECK_FALSE(oracle_linkage({cycle_graph(4), {{0, 2}}}, true));

    // The path itself.
    auto p = oracle_linkage({path_graph(4), {{0, 3}}}, true);
    REQUIRE(p);
    CHECK(p->paths == std::vector<std::vector<int>>{{0, 1, 2, 3}});
}

TEST_CASE("non-hamiltonian linkage takes any path") {
    auto w = oracle_linkage({cycle_graph(4), {{0, 2}}}, false);
    REQUIRE(w);
    CHECK(linkage_is_valid(cycle_graph(4), {{0, 2}}, *w, false));
    CHECK_FALSE(oracle_linkage({Graph::from_edges(4, {{0, 1}, {2, 3}}), {{0, 2}}}, false));
}

TEST_CASE("two-pair linkages") {
    // K6: pick two pairs; a Hamiltonian linkage must exist.
    LinkageInstance inst{complete_graph(6), {{0, 3}, {1, 4}}};
    auto w = oracle_linkage(inst, true);
    REQUIRE(w);
    CHECK(linkage_is_valid(inst.graph, inst.pairs, *w, true));

    // C6 with crossing pairs cannot be linked at all.
    LinkageInstance crossing{cycle_graph(6), {{0, 3}, {1, 4}}};
    CHECK_FALSE(oracle_linkage(crossing, false));
}

TEST_CASE("instance validation") {
    CHECK_THROWS_AS((void)oracle_linkage({path_graph(4), {{0, 0}}}, true), PreconditionError);
    CHECK_THROWS_AS((void)oracle_linkage({path_graph(4), {{0, 1}, {1, 2}}}, true),
                    PreconditionError);
    CHECK_THROWS_AS((void)oracle_linkage({path_graph(4), {{0, 9}}}, true), PreconditionError);
}

TEST_CASE("size guards refuse rather than answer") {
    OracleLimits tight;
    tight.max_backtrack_n = 6;
    tight.max_dp_n = 6;
    CHECK_THROWS_AS((void)oracle_linkage({path_graph(8), {{0, 1}, {2, 3}}}, true, tight),
                    SizeGuardError);
    CHECK_THROWS_AS((void)oracle_min_defect({path_graph(8), {{0, 1}}}, tight), SizeGuardError);
}

TEST_CASE("min defect examples") {
    CHECK(oracle_min_defect({path_graph(4), {{0, 3}}}) == Defect::finite(0));
    CHECK(oracle_min_defect({path_graph(4), {{0, 2}}}) == Defect::finite(1));
    Graph two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK(oracle_min_defect({two_k2, {{0, 2}}}).is_infinite());
    CHECK(oracle_min_defect({path_graph(3), {}}) == Defect::finite(3));
}

TEST_CASE("min defect is zero exactly when a hamiltonian linkage exists") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 3 + (int)rng.below(5);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.chance(0.5)) edges.push_back({u, v});
        Graph g = Graph::from_edges(n, edges);
        int s = (int)rng.below(n), t = (int)rng.below(n);
        if (s == t) continue;
        LinkageInstance inst{g, {{s, t}}};
        bool ham = oracle_linkage(inst, true).has_value();
        CHECK((oracle_min_defect(inst) == Defect::finite(0)) == ham);
    }
}

TEST_CASE("path cover number examples") {
    CHECK(oracle_path_cover_number(path_graph(5)) == 1);
    CHECK(oracle_path_cover_number(star_graph(3)) == 2);
    CHECK(oracle_path_cover_number(empty_graph(3)) == 3);
    CHECK(oracle_path_cover_number(cycle_graph(6)) == 1);
    CHECK(oracle_path_cover_number(empty_graph(0)) == 0);
}

TEST_CASE("path cover number is at most the independence number when connected") {
    for (int n = 2; n <= 8; ++n) {
        for (EdgeMask mask : connected_representatives(n)) {
            Graph g = graph_from_mask(n, mask);
            CHECK(oracle_path_cover_number(g) <= independence_number(g));
        }
    }
}

TEST_CASE("hamiltonian linkedness") {
    CHECK(oracle_is_ham_linked(complete_graph(4), 1));
    CHECK_FALSE(oracle_is_ham_linked(cycle_graph(4), 1));
    CHECK(oracle_is_ham_linked(complete_graph(6), 2));
    CHECK_FALSE(oracle_is_ham_linked(cycle_graph(5), 1));
    CHECK_FALSE(oracle_is_ham_linked(complete_graph(3), 2));  // too few vertices
}

TEST_CASE("edge monotonicity of hamiltonian linkage") {
    SplitMix64 rng(17);
    int interesting = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int n = 4 + (int)rng.below(4);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.chance(0.5)) edges.push_back({u, v});
        Graph g = Graph::from_edges(n, edges);
        if (!oracle_linkage({g, {{0, 1}}}, true)) continue;
        ++interesting;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (g.has_edge(u, v)) continue;
                auto more = edges;
                more.push_back({u, v});
                CHECK(oracle_linkage({Graph::from_edges(n, more), {{0, 1}}}, true).has_value());
            }
    }
    CHECK(interesting > 20);
}

TEST_CASE("dp fast path agrees with backtracking") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + (int)rng.below(6);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.chance(0.5)) edges.push_back({u, v});
        Graph g = Graph::from_edges(n, edges);
        int s = 0, t = 1 + (int)rng.below(n - 1);
        LinkageInstance inst{g, {{s, t}}};
        OracleLimits no_dp;
        no_dp.max_dp_n = 0;  // force the generic search
        no_dp.max_backtrack_n = 12;
        auto via_dp = oracle_linkage(inst, true);
        auto via_bt = oracle_linkage(inst, true, no_dp);
        CHECK(via_dp.has_value() == via_bt.has_value());
        if (via_dp) CHECK(linkage_is_valid(g, inst.pairs, *via_dp, true));
        if (via_bt) CHECK(linkage_is_valid(g, inst.pairs, *via_bt, true));
        CHECK(via_dp.has_value() == dp_has_ham_path_between(g, s, t));
    }
}

TEST_CASE("labelling number oracle") {
    CHECK(oracle_lambda(complete_graph(3), false) == 4);
    CHECK(oracle_lambda(cycle_graph(4), false) == 4);
    CHECK(oracle_lambda(path_graph(3), true) == 3);
    CHECK(oracle_lambda(path_graph(4), false) == 3);
    CHECK(oracle_lambda(path_graph(4), true) == 3);
    CHECK(oracle_lambda(complete_graph(3), true) == 4);
    CHECK(oracle_lambda(empty_graph(1), false) == 0);
}

TEST_SUITE_END();
