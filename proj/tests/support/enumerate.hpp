#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hamlink/graph.hpp"

namespace hamlink::testing {

// Small graphs as edge bitmasks over the C(n,2) vertex pairs, pair (i, j)
// with i < j at bit j*(j-1)/2 + i. Used by the exhaustive sweeps, which need
// one representative per isomorphism class.
using EdgeMask = std::uint64_t;

inline int pair_bit(int i, int j) {  // requires i < j
    return j * (j - 1) / 2 + i;
}

Graph graph_from_mask(int n, EdgeMask mask);
EdgeMask mask_from_graph(const Graph& g);

bool mask_connected(int n, EdgeMask mask);
int mask_alpha(int n, EdgeMask mask);

// Canonical form under vertex relabeling (minimum mask over refined
// permutations, complement-normalized). Equal forms == isomorphic graphs.
struct CanonicalForm {
    int n;
    int edges;
    EdgeMask mask;
    bool operator==(const CanonicalForm&) const = default;
};
CanonicalForm canonical_form(int n, EdgeMask mask);

// One representative per isomorphism class of graphs on exactly n vertices
// (connected or not), built by extending the (n-1)-vertex representatives.
// With max_alpha set, classes whose independence number exceeds it are
// pruned (valid because induced subgraphs never have larger independence
// number). Deterministic output order.
std::vector<EdgeMask> graph_representatives(int n, std::optional<int> max_alpha = std::nullopt);

// Convenience: representatives filtered to connected graphs.
std::vector<EdgeMask> connected_representatives(int n, std::optional<int> max_alpha = std::nullopt);

// All labeled connected graphs on n vertices (direct 2^C(n,2) scan; keep n
// small).
std::vector<EdgeMask> labeled_connected_masks(int n);

}  // namespace hamlink::testing
