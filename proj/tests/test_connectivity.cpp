#include "doctest.h"
#include "hamlink/connectivity.hpp"
#include "hamlink/rng.hpp"
#include "support/builders.hpp"
#include "support/enumerate.hpp"
#include "support/naive.hpp"

using namespace hamlink;
using namespace hamlink::testing;

TEST_SUITE_BEGIN("connectivity");

namespace {

bool disconnects(const Graph& g, const VertexSet& cut) {
    std::vector<int> keep;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (std::find(cut.begin(), cut.end(), v) == cut.end()) keep.push_back(v);
    auto sub = induced_subgraph(g, keep);
    return connected_components(sub.graph).size() > 1;
}

}  // namespace

TEST_CASE("complete graphs have connectivity n-1 and an empty cut") {
    auto r = vertex_connectivity(complete_graph(5));
    CHECK(r.connectivity == 4);
    CHECK(r.cut.empty());
    CHECK(vertex_connectivity(complete_graph(1)).connectivity == 0);
    CHECK(vertex_connectivity(complete_graph(2)).connectivity == 1);
}

TEST_CASE("cycle has connectivity two with a certified cut") {
    auto r = vertex_connectivity(cycle_graph(6));
    CHECK(r.connectivity == 2);
    REQUIRE(r.cut.size() == 2);
    CHECK(disconnects(cycle_graph(6), r.cut));
}

TEST_CASE("petersen graph is 3-connected") {
    auto r = vertex_connectivity(petersen_graph());
    CHECK(r.connectivity == 3);
    CHECK(naive_vertex_connectivity(petersen_graph()) == 3);
    CHECK(disconnects(petersen_graph(), r.cut));
}

TEST_CASE("disconnected input reports connectivity zero") {
    Graph g = Graph::from_edges(4, {{0, 1}, {2, 3}});
    auto r = vertex_connectivity(g);
    CHECK(r.connectivity == 0);
    CHECK(r.cut.empty());
}

TEST_CASE("connectivity equals the subset-enumeration minimum on all connected graphs n <= 7") {
    for (int n = 2; n <= 7; ++n) {
        for (EdgeMask mask : connected_representatives(n)) {
            Graph g = graph_from_mask(n, mask);
            auto r = vertex_connectivity(g);
            CHECK(r.connectivity == naive_vertex_connectivity(g));
            if (!r.cut.empty()) {
                CHECK((int)r.cut.size() == r.connectivity);
                CHECK(disconnects(g, r.cut));
            }
        }
    }
}

TEST_CASE("adding an edge never decreases connectivity") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + (int)rng.below(7);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.chance(0.5)) edges.push_back({u, v});
        Graph g = Graph::from_edges(n, edges);
        int before = vertex_connectivity(g).connectivity;
        // First missing edge.
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (g.has_edge(u, v)) continue;
                auto more = edges;
                more.push_back({u, v});
                CHECK(vertex_connectivity(Graph::from_edges(n, more)).connectivity >= before);
                u = n;
                break;
            }
        }
    }
}

TEST_CASE("cut ties resolve to the lexicographically smallest cut") {
    // C4 has two minimum cuts, {0,2} and {1,3}.
    auto r = vertex_connectivity(cycle_graph(4));
    CHECK(r.connectivity == 2);
    CHECK(r.cut == VertexSet{0, 2});

    // Theta graph: 0 and 4 joined by three 2-paths; the unique minimum cut
    // is the pair of branch vertices.
    Graph theta = Graph::from_edges(5, {{0, 1}, {1, 4}, {0, 2}, {2, 4}, {0, 3}, {3, 4}});
    auto t = vertex_connectivity(theta);
    CHECK(t.connectivity == 2);
    CHECK(t.cut == VertexSet{0, 4});
}

TEST_CASE("menger fan in a complete graph") {
    Fan fan = menger_fan(complete_graph(4), 0, {1, 2, 3}, 3);
    REQUIRE(fan.paths.size() == 3);
    for (const auto& p : fan.paths) CHECK(p.size() == 2);
}

TEST_CASE("menger fan around a cycle") {
    Fan fan = menger_fan(cycle_graph(6), 0, {2, 4}, 2);
    REQUIRE(fan.paths.size() == 2);
    // Unique by structure.
    CHECK(fan.paths[0] == std::vector<int>{0, 1, 2});
    CHECK(fan.paths[1] == std::vector<int>{0, 5, 4});
}

TEST_CASE("menger fan on the petersen graph") {
    // Inner pentagon from an outer vertex.
    Fan fan = menger_fan(petersen_graph(), 0, {5, 6, 7, 8, 9}, 3);
    CHECK(fan.paths.size() == 3);
}

TEST_CASE("menger fan reports violated connectivity promises") {
    CHECK_THROWS_AS(menger_fan(path_graph(4), 0, {2, 3}, 2), PreconditionError);
    CHECK_THROWS_AS(menger_fan(path_graph(3), 0, {}, 1), PreconditionError);
    CHECK_THROWS_AS(menger_fan(path_graph(3), 0, {0, 2}, 1), PreconditionError);
}

TEST_CASE("fans are structurally sound on random graphs") {
    SplitMix64 rng(1234);
    int built = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int n = 5 + (int)rng.below(6);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.chance(0.6)) edges.push_back({u, v});
        Graph g = Graph::from_edges(n, edges);
        int s = vertex_connectivity(g).connectivity;
        if (s < 1) continue;
        int x = (int)rng.below(n);
        VertexSet targets;
        for (int v = 0; v < n; ++v)
            if (v != x && rng.chance(0.5)) targets.push_back(v);
        if (targets.empty()) continue;
        // menger_fan validates disjointness and target contact internally;
        // reaching here without a throw is the assertion.
        Fan fan = menger_fan(g, x, targets, s);
        CHECK((int)fan.paths.size() == std::min<int>(s, (int)targets.size()));
        ++built;
    }
    CHECK(built > 100);
}

TEST_SUITE_END();
