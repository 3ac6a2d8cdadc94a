#include "doctest.h"
#include "hamlink/labelling.hpp"
#include "support/builders.hpp"
#include "support/enumerate.hpp"

using namespace hamlink;
using namespace hamlink::testing;

TEST_SUITE_BEGIN("labelling");

TEST_CASE("constraint verification") {
    CHECK(verify_labelling(complete_graph(3), {{0, 2, 4}}, false));
    CHECK_FALSE(verify_labelling(complete_graph(3), {{0, 1, 4}}, false));
    // Distance-two vertices need distinct labels even without injectivity.
    CHECK_FALSE(verify_labelling(path_graph(3), {{0, 2, 0}}, false));
    CHECK(verify_labelling(path_graph(3), {{0, 2, 4}}, false));
    CHECK_FALSE(verify_labelling(path_graph(3), {{0, 2}}, false));  // wrong size
}

TEST_CASE("injective labelling numbers via path covers") {
    SolverConfig cfg;
    auto k3 = lambda_prime_via_pc(complete_graph(3), cfg);
    CHECK(k3.exact);
    CHECK(k3.value == 4);
    CHECK(verify_labelling(complete_graph(3), k3.witness, true));

    auto p3 = lambda_prime_via_pc(path_graph(3), cfg);
    CHECK(p3.value == 3);

    // The complement of P4 is P4 again: one path covers it.
    auto p4 = lambda_prime_via_pc(path_graph(4), cfg);
    CHECK(p4.exact);
    CHECK(p4.value == 3);
    CHECK(oracle_lambda(path_graph(4), true) == 3);
}

TEST_CASE("non-injective labelling numbers") {
    SolverConfig cfg;
    auto c4 = lambda_via_pc(cycle_graph(4), cfg);
    CHECK(c4.exact);
    CHECK(c4.value == 4);
    CHECK(oracle_lambda(cycle_graph(4), false) == 4);

    auto k2 = lambda_via_pc(complete_graph(2), cfg);
    CHECK(k2.exact);
    CHECK(k2.value == 2);

    // pc(complement) = 1 gives only the n-1 upper bound.
    auto p4 = lambda_via_pc(path_graph(4), cfg);
    CHECK_FALSE(p4.exact);
    CHECK(p4.value == 3);
    CHECK(oracle_lambda(path_graph(4), false) == 3);
}

TEST_CASE("bridge to the exhaustive oracle on all connected graphs up to n = 6") {
    SolverConfig cfg;
    for (int n = 1; n <= 6; ++n) {
        for (EdgeMask mask : connected_representatives(n)) {
            Graph g = graph_from_mask(n, mask);
            CAPTURE(mask);
            auto prime = lambda_prime_via_pc(g, cfg);
            REQUIRE(prime.exact);
            CHECK(prime.value == oracle_lambda(g, true));
            CHECK(prime.has_witness);
            CHECK(verify_labelling(g, prime.witness, true));

            auto plain = lambda_via_pc(g, cfg);
            int exact = oracle_lambda(g, false);
            if (plain.exact) {
                CHECK(plain.value == exact);
                CHECK(verify_labelling(g, plain.witness, false));
            } else {
                // The bound branch coincides with a one-path complement cover.
                CHECK(exact <= n - 1);
                CHECK(plain.value == n - 1);
                CHECK(oracle_path_cover_number(complement(g)) == 1);
            }
        }
    }
}

TEST_CASE("every connected 3k1-free graph is coverable by one path") {
    SolverConfig cfg;
    for (int n = 1; n <= 8; ++n) {
        for (EdgeMask mask : connected_representatives(n, 2)) {
            Graph g = graph_from_mask(n, mask);
            SolverConfig c = cfg;
            c.k = 3;
            c.verify_promise = false;
            CHECK(path_cover_number(g, c) == 1);
        }
    }
}

TEST_SUITE_END();
