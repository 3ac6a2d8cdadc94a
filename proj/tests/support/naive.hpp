#pragma once

#include "hamlink/scenario.hpp"

namespace hamlink::testing {

// Deliberately simple reimplementations used as independent oracles in the
// differential tests. None of them share code with the library paths they
// check.

std::vector<std::vector<int>> naive_components(const Graph& g);

// Removal definition: v is an articulation point iff deleting it increases
// the component count.
std::vector<int> naive_articulation_points(const Graph& g);

// Subset enumeration (n <= ~20 edges worth of subsets; keep n <= 16).
int naive_independence_number(const Graph& g);
int naive_max_clique(const Graph& g);

// Minimum size of a vertex subset whose removal disconnects the graph, by
// subset enumeration; n-1 for complete graphs.
int naive_vertex_connectivity(const Graph& g);

// Every scenario collection for the pairs over the given cut, generated by
// unrestricted sequence enumeration and filtered by the public predicates.
std::vector<std::vector<std::vector<int>>> naive_plausible_collections(
    const Graph& g, const VertexSet& cut, const std::vector<std::pair<int, int>>& pairs,
    CutCoverage coverage);

}  // namespace hamlink::testing
