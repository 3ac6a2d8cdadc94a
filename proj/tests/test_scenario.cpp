#include <set>

#include "doctest.h"
#include "hamlink/oracle.hpp"
#include "hamlink/rng.hpp"
#include "hamlink/scenario.hpp"
#include "support/builders.hpp"
#include "support/enumerate.hpp"
#include "support/naive.hpp"

using namespace hamlink;
using namespace hamlink::testing;

TEST_SUITE_BEGIN("scenario");

namespace {

std::vector<std::vector<std::vector<int>>> collect(const Graph& g, const VertexSet& cut,
                                                   const std::vector<std::pair<int, int>>& pairs,
                                                   CutCoverage coverage) {
    std::vector<std::vector<std::vector<int>>> out;
    enumerate_plausible(g, cut, pairs, coverage, [&](const ScenarioCollection& c) {
        std::vector<std::vector<int>> seqs;
        for (const auto& s : c.scenarios) seqs.push_back(s.sequence);
        out.push_back(std::move(seqs));
        return true;
    });
    return out;
}

}  // namespace

TEST_CASE("plausibility clauses on the s-a-t path") {
    Graph g = path_graph(3);  // 0 - 1 - 2, cut {1}
    ScenarioCollection c = make_partition(g, {1});
    c.scenarios = {{{0, 2}, {0, 1, 2}}};
    CHECK(is_plausible(c, g));

    // Omitting the cut vertex violates the exactly-once clause; the relaxed
    // clause tolerates it (C4 with cut {1,3}: the sequence 0,1,2 skips 3).
    Graph c4 = cycle_graph(4);
    ScenarioCollection cc = make_partition(c4, {1, 3});
    cc.scenarios = {{{0, 2}, {0, 1, 2}}};
    CHECK_FALSE(is_plausible(cc, c4));
    CHECK(is_plausible(cc, c4, CutCoverage::at_most_once));

    // Consecutive non-adjacent cut vertices violate the adjacency clause.
    Graph g2 = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});  // C4 relabeled
    ScenarioCollection c2 = make_partition(g2, {1, 2});
    c2.scenarios = {{{0, 3}, {0, 1, 2, 3}}};  // 1,2 not adjacent
    CHECK_FALSE(is_plausible(c2, g2));
}

TEST_CASE("scenario structure predicate") {
    Graph g = cycle_graph(4);
    ScenarioCollection part = make_partition(g, {1, 3});
    CHECK(is_scenario_sequence(part, {{0, 2}, {0, 1, 2}}));
    CHECK_FALSE(is_scenario_sequence(part, {{0, 2}, {0, 2}}));       // 0,2 in different components
    CHECK_FALSE(is_scenario_sequence(part, {{0, 2}, {0}}));          // too short
    CHECK_FALSE(is_scenario_sequence(part, {{0, 2}, {2, 1, 0}}));    // wrong endpoints
}

TEST_CASE("no three consecutive vertices of one component") {
    // 0-1-2 inside one component, 3 the cut, component {0,1,2} a triangle.
    Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}});
    ScenarioCollection part = make_partition(g, {3});
    CHECK_FALSE(is_scenario_sequence(part, {{0, 4}, {0, 1, 2, 3, 4}}));
    CHECK(is_scenario_sequence(part, {{0, 4}, {0, 2, 3, 4}}));
    CHECK(is_scenario_sequence(part, {{1, 4}, {1, 2, 3, 4}}));
}

TEST_CASE("enumeration on the s-a-t path yields exactly one collection") {
    auto cols = collect(path_graph(3), {1}, {{0, 2}}, CutCoverage::exactly_once);
    REQUIRE(cols.size() == 1);
    CHECK(cols[0][0] == std::vector<int>{0, 1, 2});
}

TEST_CASE("frozen counts for the C4 instance, from the independent enumerator") {
    // Computed with naive_plausible_collections before the solver was built:
    // the strict count is 0; the relaxed count is 2 (sequences 0,1,2 and
    // 0,3,2).
    Graph c4 = cycle_graph(4);
    auto strict_naive = naive_plausible_collections(c4, {1, 3}, {{0, 2}}, CutCoverage::exactly_once);
    auto relaxed_naive =
        naive_plausible_collections(c4, {1, 3}, {{0, 2}}, CutCoverage::at_most_once);
    CHECK(strict_naive.size() == 0);
    REQUIRE(relaxed_naive.size() == 2);
    CHECK(relaxed_naive[0][0] == std::vector<int>{0, 1, 2});
    CHECK(relaxed_naive[1][0] == std::vector<int>{0, 3, 2});

    CHECK(collect(c4, {1, 3}, {{0, 2}}, CutCoverage::exactly_once) == strict_naive);
    CHECK(collect(c4, {1, 3}, {{0, 2}}, CutCoverage::at_most_once) == relaxed_naive);
}

TEST_CASE("enumeration matches the naive generate-and-filter oracle") {
    SplitMix64 rng(321);
    int nonempty = 0;
    for (int trial = 0; trial < 120; ++trial) {
        int n = 3 + (int)rng.below(5);  // up to 7
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.chance(0.5)) edges.push_back({u, v});
        Graph g = Graph::from_edges(n, edges);
        // A genuine cut of up to 2 vertices, if one exists.
        VertexSet cut;
        bool found = false;
        for (int a = 0; a < n && !found; ++a) {
            Bitset sub = g.full_vertex_set();
            sub.reset(a);
            if (within::components(g, sub).size() > 1) {
                cut = {a};
                found = true;
            }
        }
        for (int a = 0; a < n && !found; ++a)
            for (int b = a + 1; b < n && !found; ++b) {
                Bitset sub = g.full_vertex_set();
                sub.reset(a);
                sub.reset(b);
                if (within::components(g, sub).size() > 1) {
                    cut = {a, b};
                    found = true;
                }
            }
        if (!found) continue;
        // Pairs avoiding duplicates.
        std::vector<std::pair<int, int>> pairs;
        int ell = 1 + (int)rng.below(2);
        std::vector<int> verts;
        for (int v = 0; v < n; ++v) verts.push_back(v);
        for (int i = 0; i < 2 * ell && !verts.empty(); ++i) {
            int j = (int)rng.below(verts.size());
            std::swap(verts[j], verts.back());
        }
        if (n < 2 * ell) continue;
        pairs.clear();
        for (int i = 0; i < ell; ++i)
            pairs.push_back({verts[verts.size() - 2 * i - 1], verts[verts.size() - 2 * i - 2]});

        for (auto coverage : {CutCoverage::exactly_once, CutCoverage::at_most_once}) {
            auto mine = collect(g, cut, pairs, coverage);
            auto naive = naive_plausible_collections(g, cut, pairs, coverage);
            // Same set, no duplicates.
            std::set<std::vector<std::vector<int>>> mine_set(mine.begin(), mine.end());
            CHECK(mine_set.size() == mine.size());
            CHECK(std::vector<std::vector<std::vector<int>>>(mine_set.begin(), mine_set.end()) ==
                  naive);
            if (!naive.empty()) ++nonempty;
        }
    }
    CHECK(nonempty > 30);
}

TEST_CASE("every yielded collection is plausible and a collection of scenarios") {
    Graph g = cycle_graph(6);
    auto cut = VertexSet{0, 3};
    enumerate_plausible(g, cut, {{1, 5}}, CutCoverage::exactly_once,
                        [&](const ScenarioCollection& c) {
                            CHECK(is_plausible(c, g));
                            for (const auto& s : c.scenarios)
                                CHECK(is_scenario_sequence(c, s));
                            return true;
                        });
}

TEST_CASE("lazy enumeration stops on request") {
    int seen = 0;
    enumerate_plausible(complete_graph(6), {0, 1}, {{2, 3}}, CutCoverage::exactly_once,
                        [&](const ScenarioCollection&) { return ++seen < 2; });
    CHECK(seen == 2);
}

TEST_CASE("reduce on the worked example shape") {
    // Path P = s,a,b,c,d,e,f,g,h,o,p,q,r,y,z,t with s,a,b,c in Q1; d,e,f in
    // the cut; g,h,o in Q2; p in the cut; q in Q1; r in the cut; y,z,t in Q1.
    // Vertex ids:  s=0 a=1 b=2 c=3 d=4 e=5 f=6 g=7 h=8 o=9 p=10 q=11 r=12
    // y=13 z=14 t=15.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < 16; ++i) edges.push_back({i, i + 1});  // the path itself
    // Extra edges keeping Q1 = {0,1,2,3,11,13,14,15} connected after the cut
    // {4,5,6,10,12} is removed, without touching Q2 = {7,8,9}.
    edges.push_back({3, 11});
    edges.push_back({11, 13});
    Graph g = Graph::from_edges(16, edges);

    VertexSet cut{4, 5, 6, 10, 12};
    ScenarioCollection coll = make_partition(g, cut);
    REQUIRE(coll.component_count == 2);
    // sc(P) = s,c,d,e,f,g,o,p,q,r,y,t
    coll.scenarios = {{{0, 15}, {0, 3, 4, 5, 6, 7, 9, 10, 11, 12, 13, 15}}};
    REQUIRE(is_plausible(coll, g));

    VertexSet q1{0, 1, 2, 3, 11, 13, 14, 15};
    VertexSet q2{7, 8, 9};
    auto r1 = reduce_component(q1, coll);
    auto r2 = reduce_component(q2, coll);

    // Q1 loses q (=11), keeps everything else, and asks for (s,c) and (y,t).
    CHECK(r1.vertices == VertexSet{0, 1, 2, 3, 13, 14, 15});
    CHECK(r1.pairs == std::vector<std::pair<int, int>>{{0, 3}, {13, 15}});
    // Q2 keeps all vertices and asks for (g,o).
    CHECK(r2.vertices == q2);
    CHECK(r2.pairs == std::vector<std::pair<int, int>>{{7, 9}});
}

TEST_CASE("reduce removes isolated scenario vertices and keeps untouched components whole") {
    // a1, x, a2 with a1,a2 in the cut and x alone in its component slice.
    Graph g = path_graph(5);  // 0-1-2-3-4, cut {1,3}
    ScenarioCollection coll = make_partition(g, {1, 3});
    coll.scenarios = {{{0, 4}, {0, 1, 2, 3, 4}}};
    REQUIRE(is_plausible(coll, g));
    auto r = reduce_component({2}, coll);
    CHECK(r.vertices.empty());  // 2 sits between two cut vertices
    CHECK(r.pairs.empty());

    // A component with no scenario vertices survives unchanged.
    Graph h = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 5}});
    ScenarioCollection ch = make_partition(h, {0});
    ch.scenarios = {{{4, 5}, {4, 5}}};  // never visits the triangle {1,2}
    (void)ch;
    auto rh = reduce_component({1, 2}, ch);
    CHECK(rh.vertices == VertexSet{1, 2});
    CHECK(rh.pairs.empty());
}

TEST_CASE("reduce partitions scenario vertices of a component") {
    // Deleted set, pair endpoints, and untouched vertices partition each
    // component.
    SplitMix64 rng(55);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 4 + (int)rng.below(4);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.chance(0.55)) edges.push_back({u, v});
        Graph g = Graph::from_edges(n, edges);
        VertexSet cut;
        for (int a = 0; a < n && cut.empty(); ++a) {
            Bitset sub = g.full_vertex_set();
            sub.reset(a);
            if (within::components(g, sub).size() > 1) cut = {a};
        }
        if (cut.empty()) continue;
        int s = -1, t = -1;
        for (int v = 0; v < n && t < 0; ++v)
            if (v != cut[0]) (s < 0 ? s : t) = v;
        enumerate_plausible(g, cut, {{s, t}}, CutCoverage::exactly_once,
                            [&](const ScenarioCollection& c) {
                                for (int ci = 0; ci < c.component_count; ++ci) {
                                    VertexSet q;
                                    for (int v = 0; v < n; ++v)
                                        if (c.component_of[v] == ci) q.push_back(v);
                                    auto red = reduce_component(q, c);
                                    Bitset endpoint_set((int)c.component_of.size());
                                    for (auto [a, b] : red.pairs) {
                                        endpoint_set.set(a);
                                        endpoint_set.set(b);
                                    }
                                    for (int v : q) {
                                        bool survives =
                                            std::find(red.vertices.begin(), red.vertices.end(),
                                                      v) != red.vertices.end();
                                        bool on_scenario = false, has_comp_neighbor = false;
                                        for (const auto& sc : c.scenarios)
                                            for (std::size_t i = 0; i < sc.sequence.size(); ++i) {
                                                if (sc.sequence[i] != v) continue;
                                                on_scenario = true;
                                                if (i > 0 && c.component_of[sc.sequence[i - 1]] == ci)
                                                    has_comp_neighbor = true;
                                                if (i + 1 < sc.sequence.size() &&
                                                    c.component_of[sc.sequence[i + 1]] == ci)
                                                    has_comp_neighbor = true;
                                            }
                                        CHECK(survives == (!on_scenario || has_comp_neighbor));
                                        CHECK(endpoint_set.test(v) ==
                                              (on_scenario && has_comp_neighbor));
                                    }
                                }
                                return true;
                            });
    }
}

TEST_CASE("round trip: scenarios of a known hamiltonian linkage are plausible and reducible") {
    SplitMix64 rng(77);
    int checked = 0;
    for (int trial = 0; trial < 300 && checked < 40; ++trial) {
        // Half the trials glue two cliques at a vertex (guaranteed
        // articulation plus Hamiltonian path), half are plain random.
        int n;
        std::vector<std::pair<int, int>> edges;
        if (trial % 2 == 0) {
            int p = 2 + (int)rng.below(3), q = 2 + (int)rng.below(3);
            n = p + q - 1;
            int glue = p - 1;
            for (int u = 0; u < p; ++u)
                for (int v = u + 1; v < p; ++v) edges.push_back({u, v});
            for (int u = glue; u < n; ++u)
                for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (!((u < p && v < p) || (u >= glue && v >= glue)) && rng.chance(0.15))
                        edges.push_back({u, v});
        } else {
            n = 4 + (int)rng.below(4);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng.chance(0.5)) edges.push_back({u, v});
        }
        Graph g = Graph::from_edges(n, edges);
        int s = 0, t = n - 1;
        auto witness = oracle_linkage({g, {{s, t}}}, true);
        if (!witness) continue;
        VertexSet cut;
        for (int a = 0; a < n && cut.empty(); ++a) {
            Bitset sub = g.full_vertex_set();
            sub.reset(a);
            if (a != s && a != t && within::components(g, sub).size() > 1) cut = {a};
        }
        if (cut.empty()) continue;
        ++checked;

        // Build sc(P) for the witness path: cut vertices, their path
        // neighbors, and the endpoints.
        ScenarioCollection coll = make_partition(g, cut);
        const auto& path = witness->paths[0];
        std::vector<int> seq;
        for (std::size_t i = 0; i < path.size(); ++i) {
            bool keep = i == 0 || i + 1 == path.size() || coll.component_of[path[i]] == -1 ||
                        (i > 0 && coll.component_of[path[i - 1]] == -1) ||
                        (i + 1 < path.size() && coll.component_of[path[i + 1]] == -1);
            if (keep) seq.push_back(path[i]);
        }
        coll.scenarios = {{{s, t}, seq}};
        CHECK(is_scenario_sequence(coll, coll.scenarios[0]));
        CHECK(is_plausible(coll, g));
        for (int ci = 0; ci < coll.component_count; ++ci) {
            VertexSet q;
            for (int v = 0; v < n; ++v)
                if (coll.component_of[v] == ci) q.push_back(v);
            auto red = reduce_component(q, coll);
            if (red.vertices.empty()) {
                CHECK(red.pairs.empty());
                continue;
            }
            auto ind = induced_subgraph(g, red.vertices);
            LinkageInstance inst{ind.graph, {}};
            for (auto [a, b] : red.pairs) inst.pairs.push_back({ind.to_sub[a], ind.to_sub[b]});
            CHECK(oracle_linkage(inst, true).has_value());
        }
    }
    CHECK(checked >= 30);
}

TEST_SUITE_END();
