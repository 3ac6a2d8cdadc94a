#include "hamlink/structural.hpp"

#include <algorithm>

#include "hamlink/oracle.hpp"

namespace hamlink {

namespace {

void require_vertex(const Graph& g, int v, const char* who) {
    if (v < 0 || v >= g.vertex_count())
        throw PreconditionError(std::string(who) + ": vertex out of range");
}

void check_promise(const Graph& g, int k, bool need_connected, const StructuralOptions& opt,
                   const char* who) {
    if (!opt.check_promise) return;
    if (need_connected && !within::is_connected(g, g.full_vertex_set()))
        throw PromiseError(std::string(who) + ": graph is not connected");
    if (!is_kk1_free(g, k))
        throw PromiseError(std::string(who) + ": graph has an independent set of size " +
                           std::to_string(k));
}

Bitset minus(const Graph& g, std::initializer_list<int> removed) {
    Bitset sub = g.full_vertex_set();
    for (int v : removed) sub.reset(v);
    return sub;
}

int components_without(const Graph& g, std::initializer_list<int> removed) {
    return (int)within::components(g, minus(g, removed)).size();
}

// Divergence reporting for the validated reconstructions.
void cross_check(const Graph& g, bool decided, bool oracle_says, const std::string& query) {
    if (decided == oracle_says) return;
    throw InvariantViolation("structural divergence on " + query + ": decided " +
                             (decided ? "true" : "false") + ", oracle says " +
                             (oracle_says ? "true" : "false") + "; graph:\n" +
                             format_edge_list(g));
}

}  // namespace

bool ham_path_between_3k1(const Graph& g, int u, int v, const StructuralOptions& opt) {
    require_vertex(g, u, "ham_path_between_3k1");
    require_vertex(g, v, "ham_path_between_3k1");
    if (u == v) throw PreconditionError("ham_path_between_3k1: endpoints must differ");
    check_promise(g, 3, true, opt, "ham_path_between_3k1");

    Bitset arts = within::articulation_points(g, g.full_vertex_set());
    if (arts.test(u) || arts.test(v)) return false;
    for (int x = arts.next(0); x >= 0; x = arts.next(x + 1)) {
        auto comps = within::components(g, minus(g, {x}));
        for (const auto& c : comps)
            if (c.test(u) && c.test(v)) return false;
    }
    if (g.vertex_count() > 2 && components_without(g, {u, v}) > 1) return false;
    return true;
}

bool ham_path_from_3k1(const Graph& g, int u, const StructuralOptions& opt) {
    require_vertex(g, u, "ham_path_from_3k1");
    check_promise(g, 3, true, opt, "ham_path_from_3k1");
    return !within::articulation_points(g, g.full_vertex_set()).test(u);
}

bool pc2_from_pair_3k1(const Graph& g, int u, int v, const StructuralOptions& opt) {
    require_vertex(g, u, "pc2_from_pair_3k1");
    require_vertex(g, v, "pc2_from_pair_3k1");
    if (u == v) throw PreconditionError("pc2_from_pair_3k1: vertices must differ");
    check_promise(g, 3, true, opt, "pc2_from_pair_3k1");
    return true;
}

HamPath4k1Result ham_path_4k1(const Graph& g, const StructuralOptions& opt) {
    check_promise(g, 4, true, opt, "ham_path_4k1");
    VertexSet arts = articulation_points(g);
    bool ok = true;
    for (int x : arts) {
        if (components_without(g, {x}) != 2) {
            ok = false;
            break;
        }
    }
    if (ok) {
        for (std::size_t i = 0; i < arts.size() && ok; ++i)
            for (std::size_t j = i + 1; j < arts.size() && ok; ++j)
                for (std::size_t l = j + 1; l < arts.size() && ok; ++l)
                    if (g.has_edge(arts[i], arts[j]) && g.has_edge(arts[j], arts[l]) &&
                        g.has_edge(arts[i], arts[l]))
                        ok = false;
    }
    return {ok, !ok};
}

namespace {

// Hamiltonian path of the component `comp` (3K1-free by the surrounding
// promise) from u to some neighbor of `entry` other than u. Trivially true
// when the component is just {u}.
bool component_exit_exists(const Graph& g, const Bitset& comp, int u, int entry) {
    if (comp.count() == 1) return true;  // u itself neighbors the entry vertex
    auto ind = induced_subgraph(g, comp.to_vector());
    StructuralOptions inner;
    inner.check_promise = false;
    Bitset exits = g.row(entry) & comp;
    for (int w = exits.next(0); w >= 0; w = exits.next(w + 1)) {
        if (w == u) continue;
        if (ham_path_between_3k1(ind.graph, ind.to_sub[u], ind.to_sub[w], inner)) return true;
    }
    return false;
}

bool from_4k1_impl(const Graph& g, int u) {
    int n = g.vertex_count();
    if (n <= 2) return true;

    StructuralOptions inner;
    inner.check_promise = false;
    if (!ham_path_4k1(g, inner).has_ham_path) return false;

    Bitset arts = within::articulation_points(g, g.full_vertex_set());
    if (arts.test(u)) return false;

    // No second vertex may split the graph three ways together with u.
    for (int x = 0; x < n; ++x)
        if (x != u && components_without(g, {u, x}) >= 3) return false;

    // The path must cover u's side of every articulation point entirely
    // before crossing it.
    for (int x = arts.next(0); x >= 0; x = arts.next(x + 1)) {
        auto comps = within::components(g, minus(g, {x}));
        const Bitset* r = nullptr;
        for (const auto& c : comps)
            if (c.test(u)) r = &c;
        if (!r || !component_exit_exists(g, *r, u, x)) return false;
    }

    // Cuts of size two containing u whose removal leaves two components, one
    // side of which the remaining cut vertex reaches only through
    // articulation points of that side.
    for (int w1 = 0; w1 < n; ++w1) {
        if (w1 == u) continue;
        Bitset rest = minus(g, {u, w1});
        auto comps = within::components(g, rest);
        if (comps.size() != 2) continue;
        for (const auto& q : comps) {
            Bitset touch = g.row(w1) & q;
            if (touch.none()) continue;
            Bitset q_arts = within::articulation_points(g, q);
            if (touch.is_subset_of(q_arts)) return false;
        }
    }
    return true;
}

}  // namespace

bool ham_path_from_4k1(const Graph& g, int u, const StructuralOptions& opt) {
    require_vertex(g, u, "ham_path_from_4k1");
    check_promise(g, 4, true, opt, "ham_path_from_4k1");
    bool decided = from_4k1_impl(g, u);
    if (opt.validate && g.vertex_count() <= opt.validate_max_n)
        cross_check(g, decided, dp_has_ham_path_from(g, u),
                    "ham_path_from_4k1(u=" + std::to_string(u) + ")");
    return decided;
}

namespace {

bool pc_uv_impl(const Graph& g, int u, int v) {
    int n = g.vertex_count();
    auto full = g.full_vertex_set();

    auto comps_all = within::components(g, full);
    if (comps_all.size() > 2) return false;
    if (comps_all.size() == 2) {
        const Bitset* cu = &comps_all[0];
        const Bitset* cv = &comps_all[1];
        if (!cu->test(u)) std::swap(cu, cv);
        if (!cu->test(u) || !cv->test(v)) return false;  // same side
        StructuralOptions inner;
        inner.check_promise = false;
        auto iu = induced_subgraph(g, cu->to_vector());
        auto iv = induced_subgraph(g, cv->to_vector());
        return ham_path_from_3k1(iu.graph, iu.to_sub[u], inner) &&
               ham_path_from_3k1(iv.graph, iv.to_sub[v], inner);
    }

    Bitset arts = within::articulation_points(g, full);

    // (a) An articulation point splitting the graph three ways forces u and
    // v into different parts, neither equal to the split vertex.
    for (int x = arts.next(0); x >= 0; x = arts.next(x + 1)) {
        auto comps = within::components(g, minus(g, {x}));
        if ((int)comps.size() < 3) continue;
        if (x == u || x == v) return false;
        for (const auto& c : comps)
            if (c.test(u) && c.test(v)) return false;
    }

    // (b) A triangle of articulation points splitting the graph three ways:
    // u and v must come from different attached blocks.
    std::vector<int> art_list = arts.to_vector();
    for (std::size_t i = 0; i < art_list.size(); ++i) {
        for (std::size_t j = i + 1; j < art_list.size(); ++j) {
            for (std::size_t l = j + 1; l < art_list.size(); ++l) {
                int x = art_list[i], y = art_list[j], z = art_list[l];
                if (!(g.has_edge(x, y) && g.has_edge(y, z) && g.has_edge(x, z))) continue;
                auto comps = within::components(g, minus(g, {x, y, z}));
                if ((int)comps.size() < 3) continue;
                // Each component attaches to exactly one triangle vertex.
                auto block_of = [&](int w) -> int {
                    for (int c = 0; c < (int)comps.size(); ++c) {
                        if (comps[c].test(w)) return c;
                        if (w == x || w == y || w == z) {
                            Bitset touch = g.row(w) & comps[c];
                            Bitset others(n);
                            for (int o : {x, y, z})
                                if (o != w) others |= g.row(o) & comps[c];
                            if (touch.any() && others.none()) return c;
                        }
                    }
                    return -1;
                };
                int bu = block_of(u), bv = block_of(v);
                if (bu >= 0 && bu == bv) return false;
            }
        }
    }

    // (c) Removing both prescribed vertices may leave at most two pieces.
    if (n > 2 && components_without(g, {u, v}) >= 3) return false;

    // (d) Two pinch patterns around an articulation point.
    auto pinch = [&](int uu, int vv) -> bool {
        for (int x = arts.next(0); x >= 0; x = arts.next(x + 1)) {
            if (x == uu || x == vv) continue;
            auto comps = within::components(g, minus(g, {x}));
            const Bitset* q1 = nullptr;
            for (const auto& c : comps)
                if (c.test(uu)) q1 = &c;
            if (!q1) continue;

            // Pattern 1: an articulation y of g[q1] with both uu and vv on
            // the same side, x and y reaching that side only through
            // {uu, vv}, and x cut off from the other side.
            Bitset q1_arts = within::articulation_points(g, *q1);
            for (int y = q1_arts.next(0); y >= 0; y = q1_arts.next(y + 1)) {
                if (y == uu || y == vv) continue;
                Bitset rest = *q1;
                rest.reset(y);
                auto sides = within::components(g, rest);
                for (const auto& j1 : sides) {
                    if (!j1.test(uu) || !j1.test(vv)) continue;
                    Bitset uv(n);
                    uv.set(uu);
                    uv.set(vv);
                    Bitset xj = g.row(x) & j1;
                    Bitset yj = g.row(y) & j1;
                    if (!xj.is_subset_of(uv) || !yj.is_subset_of(uv)) continue;
                    bool x_sees_other_side = false;
                    for (const auto& j2 : sides) {
                        if (&j2 == &j1) continue;
                        if ((g.row(x) & j2).any()) x_sees_other_side = true;
                    }
                    Bitset fill = j1;
                    fill.reset(uu);
                    fill.reset(vv);
                    if (!x_sees_other_side && fill.any()) return true;
                }
            }

            // Pattern 2: uu is itself an articulation of g[q1]; one side
            // holds vv as x's only contact, the other side is reachable from
            // both uu and x only through a single shared vertex.
            if (q1_arts.test(uu)) {
                Bitset rest = *q1;
                rest.reset(uu);
                auto sides = within::components(g, rest);
                if (sides.size() == 2) {
                    for (int a = 0; a < 2; ++a) {
                        const Bitset& ja = sides[a];
                        const Bitset& jb = sides[1 - a];
                        if (!ja.test(vv)) continue;
                        Bitset xa = g.row(x) & ja;
                        if (xa.count() != 1 || xa.next(0) != vv) continue;
                        if (ja.count() <= 1) continue;
                        Bitset ub = g.row(uu) & jb;
                        Bitset xb = g.row(x) & jb;
                        if (ub.count() == 1 && xb.count() == 1 && ub.next(0) == xb.next(0) &&
                            jb.count() > 1)
                            return true;
                    }
                }
            }
        }
        return false;
    };
    if (pinch(u, v) || pinch(v, u)) return false;
    return true;
}

}  // namespace

bool pc_uv_4k1(const Graph& g, int u, int v, const StructuralOptions& opt) {
    require_vertex(g, u, "pc_uv_4k1");
    require_vertex(g, v, "pc_uv_4k1");
    if (u == v) throw PreconditionError("pc_uv_4k1: vertices must differ");
    check_promise(g, 4, false, opt, "pc_uv_4k1");
    bool decided = pc_uv_impl(g, u, v);
    if (opt.validate && g.vertex_count() <= opt.validate_max_n)
        cross_check(g, decided, dp_has_pc_pair(g, u, v),
                    "pc_uv_4k1(u=" + std::to_string(u) + ", v=" + std::to_string(v) + ")");
    return decided;
}

namespace {

bool ham_5k1_impl(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 2) return true;
    auto full = g.full_vertex_set();
    Bitset arts = within::articulation_points(g, full);

    // No cut of size two may leave four or more pieces.
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (components_without(g, {x, y}) >= 4) return false;

    StructuralOptions inner;
    inner.check_promise = false;
    for (int x = arts.next(0); x >= 0; x = arts.next(x + 1)) {
        auto comps = within::components(g, minus(g, {x}));
        if (comps.size() >= 3) return false;
        auto decide_side = [&](const Bitset& q) -> bool {
            // The path must enter this side from x and cover it; an entry
            // vertex admitting a Hamiltonian path of the side must exist.
            auto ind = induced_subgraph(g, q.to_vector());
            Bitset entries = g.row(x) & q;
            if (is_kk1_free(ind.graph, 3)) {
                Bitset q_arts = within::articulation_points(g, q);
                Bitset good = entries;
                good.subtract(q_arts);
                return good.any();
            }
            for (int w = entries.next(0); w >= 0; w = entries.next(w + 1))
                if (ham_path_from_4k1(ind.graph, ind.to_sub[w], inner)) return true;
            return false;
        };
        if (!decide_side(comps[0]) || !decide_side(comps[1])) return false;
    }
    return true;
}

}  // namespace

bool ham_path_5k1(const Graph& g, const StructuralOptions& opt) {
    check_promise(g, 5, true, opt, "ham_path_5k1");
    bool decided = ham_5k1_impl(g);
    if (opt.validate && g.vertex_count() <= opt.validate_max_n)
        cross_check(g, decided, dp_has_ham_path(g), "ham_path_5k1");
    return decided;
}

}  // namespace hamlink
