#include "hamlink/reductions.hpp"

#include "hamlink/rng.hpp"

namespace hamlink {

namespace {

void require_connected_input(const Graph& g, const char* who) {
    if (!within::is_connected(g, g.full_vertex_set()))
        throw PreconditionError(std::string(who) + ": input graph must be connected");
}

std::vector<std::pair<int, int>> edges_of(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) edges.push_back({u, v});
    return edges;
}

}  // namespace

LinkageInstance gadget_linkage(const Graph& g, int ell) {
    if (ell < 1) throw PreconditionError("gadget_linkage: ell must be >= 1");
    require_connected_input(g, "gadget_linkage");
    int n = g.vertex_count();
    auto s = [n](int i) { return n + i; };            // s_1..s_ell
    auto t = [n, ell](int i) { return n + ell + i; }; // t_1..t_ell
    auto edges = edges_of(g);
    for (int v = 0; v < n; ++v) {
        edges.push_back({s(0), v});
        edges.push_back({t(0), v});
    }
    for (int i = 1; i < ell; ++i) {
        edges.push_back({s(0), s(i)});
        edges.push_back({s(i), t(i)});
        edges.push_back({t(i), t(0)});
    }
    LinkageInstance inst;
    inst.graph = Graph::from_edges(n + 2 * ell, edges);
    for (int i = 0; i < ell; ++i) inst.pairs.push_back({s(i), t(i)});
    return inst;
}

PathCoverGadget gadget_path_cover(const Graph& g, int ell) {
    if (ell < 1) throw PreconditionError("gadget_path_cover: ell must be >= 1");
    require_connected_input(g, "gadget_path_cover");
    int n = g.vertex_count();
    PathCoverGadget out;
    out.a = n;
    out.b = n + 1;
    out.c = n + 2;
    for (int i = 0; i < ell; ++i) out.d.push_back(n + 3 + i);
    auto edges = edges_of(g);
    for (int v = 0; v < n; ++v) edges.push_back({out.a, v});
    edges.push_back({out.a, out.b});
    edges.push_back({out.b, out.c});
    for (int di : out.d) edges.push_back({out.c, di});
    out.graph = Graph::from_edges(n + 3 + ell, edges);
    return out;
}

LinkednessGadget gadget_linkedness(const Graph& g, int ell) {
    if (ell < 1) throw PreconditionError("gadget_linkedness: ell must be >= 1");
    require_connected_input(g, "gadget_linkedness");
    int n = g.vertex_count();
    if (n <= 3 * ell)
        throw PreconditionError("gadget_linkedness: requires n > 3*ell (got n = " +
                                std::to_string(n) + ", ell = " + std::to_string(ell) + ")");
    LinkednessGadget out;
    auto edges = edges_of(g);
    for (int i = 0; i < 2 * ell; ++i) {
        int x = n + i;
        out.added.push_back(x);
        for (int v = 0; v < n; ++v) edges.push_back({x, v});
    }
    out.graph = Graph::from_edges(n + 2 * ell, edges);
    return out;
}

Graph random_kk1_free(int k, int n, double extra_edge_prob, std::uint64_t seed) {
    if (k < 2) throw PreconditionError("random_kk1_free: k must be >= 2");
    if (n < 1) throw PreconditionError("random_kk1_free: n must be >= 1");
    int parts = k - 1;
    // Balanced contiguous blocks; the first n % parts blocks get the extra
    // vertex.
    std::vector<int> block_of(n);
    {
        int base = n / parts, extra = n % parts, v = 0;
        for (int b = 0; b < parts && v < n; ++b) {
            int size = base + (b < extra ? 1 : 0);
            for (int i = 0; i < size; ++i) block_of[v++] = b;
        }
    }
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (block_of[u] == block_of[v])
                edges.push_back({u, v});
            else if (rng.chance(extra_edge_prob))
                edges.push_back({u, v});
        }
    return Graph::from_edges(n, edges);
}

}  // namespace hamlink
