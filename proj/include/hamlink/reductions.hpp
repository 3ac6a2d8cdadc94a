#pragma once

#include "hamlink/linkage.hpp"

namespace hamlink {

// Instance transformer: adds terminal pairs s_1..s_ell, t_1..t_ell (ids
// n..n+2*ell-1) with s_1 and t_1 adjacent to every original vertex and the
// remaining pairs forced to link through their private edges. The result has
// a Hamiltonian linkage iff the input has a Hamiltonian path.
LinkageInstance gadget_linkage(const Graph& g, int ell);

// Adds a,b,c,d_1..d_ell (ids n, n+1, n+2, n+3..): a adjacent to every
// original vertex, path a-b-c, and c adjacent to each d_i. The result is
// coverable by ell paths iff the input has a Hamiltonian path, in which case
// its path cover number is exactly ell.
struct PathCoverGadget {
    Graph graph;
    int a, b, c;
    std::vector<int> d;
};
PathCoverGadget gadget_path_cover(const Graph& g, int ell);

// Adds 2*ell universal vertices (ids n..n+2*ell-1). The result is
// Hamiltonian-ell-linked iff the input can be covered by ell disjoint paths.
// Requires n > 3*ell.
struct LinkednessGadget {
    Graph graph;
    std::vector<int> added;
};
LinkednessGadget gadget_linkedness(const Graph& g, int ell);

// Balanced partition into k-1 cliques plus independent inter-clique edges
// with the given probability; alpha <= k-1 by construction. Deterministic
// per seed (SplitMix64).
Graph random_kk1_free(int k, int n, double extra_edge_prob, std::uint64_t seed);

}  // namespace hamlink
