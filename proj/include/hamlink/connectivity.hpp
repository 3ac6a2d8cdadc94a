#pragma once

#include "hamlink/graph.hpp"

namespace hamlink {

// Vertex connectivity together with a certified minimum cut. The cut is
// empty exactly when the graph is complete (connectivity n-1 by convention)
// or disconnected (connectivity 0).
struct CutResult {
    int connectivity = 0;
    VertexSet cut;
};

// Internally disjoint paths from a common source into a target set; each
// path touches the target set only in its final vertex.
struct Fan {
    std::vector<std::vector<int>> paths;
};

// Exact vertex connectivity by unit-capacity max-flow over non-adjacent
// vertex pairs with split vertices. Ties between minimum cuts are resolved
// to the lexicographically smallest cut found while scanning source/sink
// pairs in increasing order.
CutResult vertex_connectivity(const Graph& g);

// Same, restricted to g[sub]; the returned cut uses original vertex ids.
CutResult vertex_connectivity_within(const Graph& g, const Bitset& sub);

// min(s, |targets|) internally disjoint paths from x into `targets`, found
// by max-flow into a super-sink. Throws PreconditionError when fewer paths
// exist (the s-connectivity precondition was false).
Fan menger_fan(const Graph& g, int x, const VertexSet& targets, int s);

}  // namespace hamlink
