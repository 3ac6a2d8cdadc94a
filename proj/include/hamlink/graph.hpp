#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "hamlink/bitset.hpp"
#include "hamlink/errors.hpp"

namespace hamlink {

// Sorted set of vertex indices of some graph.
using VertexSet = std::vector<int>;

// Immutable simple undirected graph on vertices 0..n-1. Adjacency is kept
// both as sorted neighbor lists (for ordered iteration) and as bitset rows
// (for O(n/64) membership and intersection work).
class Graph {
public:
    Graph() = default;

    // Builds a graph from an edge list. Duplicate edges are collapsed;
    // self-loops and out-of-range endpoints are rejected.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const { return rows_[u].test(v); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return (int)adj_[v].size(); }
    const Bitset& row(int v) const { return rows_[v]; }

    Bitset full_vertex_set() const {
        Bitset b(n_);
        b.set_all();
        return b;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<Bitset> rows_;
};

// Result of taking an induced subgraph: the new graph plus both directions of
// the vertex relabeling. to_parent[new_id] = old id; to_sub[old_id] = new id
// or -1 for vertices outside the set.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;
    std::vector<int> to_sub;
};

// Parses the edge-list dialect ("n m" header, then "u v" lines, 0-based,
// '#' comments allowed) or DIMACS ("c" comments, "p edge n m", "e u v"
// 1-based). Errors name the offending line.
Graph parse_graph(std::string_view text);

// Renders a graph in the edge-list dialect, optionally preceded by '#'
// comment lines. parse_graph(format_edge_list(g)) == g.
std::string format_edge_list(const Graph& g, const std::vector<std::string>& comments = {});

Graph complement(const Graph& g);

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Maximal connected vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

// Vertices whose removal increases the number of components.
VertexSet articulation_points(const Graph& g);

// Exact independence number by branch and bound with a greedy clique-cover
// upper bound for pruning. Intended for modest n; no internal guard.
int independence_number(const Graph& g);

// True iff alpha(g) < k; the underlying search exits early as soon as an
// independent set of size k is found.
bool is_kk1_free(const Graph& g, int k);

// Some independent set of exactly `size` vertices, if one exists. Shares the
// search machinery of independence_number; exposed for promise checks.
bool find_independent_set(const Graph& g, int size, VertexSet* out = nullptr);

// Subset-restricted helpers used throughout the solver. The subset bitset
// must have the graph's capacity.
namespace within {

// Components of g[sub], each a bitset, ordered by smallest member.
std::vector<Bitset> components(const Graph& g, const Bitset& sub);
bool is_connected(const Graph& g, const Bitset& sub);
bool is_complete(const Graph& g, const Bitset& sub);
// Articulation points of g[sub].
Bitset articulation_points(const Graph& g, const Bitset& sub);
int component_count_after_removal(const Graph& g, const Bitset& sub, const Bitset& removed);

}  // namespace within

}  // namespace hamlink
