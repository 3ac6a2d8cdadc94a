#include "hamlink/solver.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "hamlink/connectivity.hpp"

namespace hamlink {

std::uint64_t g_threshold(int k, int ell) {
    if (k < 2 || ell < 1) throw PreconditionError("g_threshold: requires k >= 2, ell >= 1");
    return std::max<std::uint64_t>(std::uint64_t(k) * ell, std::uint64_t(10) * ell);
}

std::uint64_t f_bound(int k, int ell) {
    if (k < 2 || ell < 1) throw PreconditionError("f_bound: requires k >= 2, ell >= 1");
    if (k == 2) return 2;
    std::uint64_t g = g_threshold(k, ell);
    if (g + ell > (std::uint64_t)std::numeric_limits<int>::max())
        throw Error("f_bound: value overflows the bookkeeping range");
    return 2 * g + f_bound(k - 1, (int)(g + ell));
}

PromiseOutcome resolve_promise(const Graph& g, SolverConfig& cfg) {
    if (cfg.k == 0) {
        if (g.vertex_count() > cfg.max_alpha_n)
            throw SizeGuardError("independence number: n = " + std::to_string(g.vertex_count()) +
                                 " exceeds guard " + std::to_string(cfg.max_alpha_n) +
                                 "; pass an explicit independence bound");
        cfg.k = independence_number(g) + 1;
        return PromiseOutcome::computed;
    }
    if (cfg.k < 1) throw PreconditionError("independence bound must be >= 1");
    if (cfg.verify_promise && g.vertex_count() <= cfg.max_alpha_n) {
        if (!is_kk1_free(g, cfg.k))
            throw PromiseError("promise violated: the graph has an independent set of size " +
                               std::to_string(cfg.k));
        return PromiseOutcome::verified;
    }
    return PromiseOutcome::trusted;
}

namespace {

// Memoization key: the vertex subset plus a normalized pair list. The
// decision is invariant under swapping the ends of a pair and reordering
// pairs, so both are canonicalized.
struct SubproblemKey {
    Bitset subset;
    std::vector<std::pair<int, int>> pairs;

    bool operator==(const SubproblemKey& o) const {
        return subset == o.subset && pairs == o.pairs;
    }
};

struct SubproblemKeyHash {
    std::size_t operator()(const SubproblemKey& k) const {
        std::size_t h = k.subset.hash();
        for (auto [a, b] : k.pairs) h = h * 1000003u ^ ((std::size_t)a << 16 ^ (std::size_t)b);
        return h;
    }
};

std::vector<std::pair<int, int>> normalize_pairs(std::vector<std::pair<int, int>> pairs) {
    for (auto& p : pairs)
        if (p.first > p.second) std::swap(p.first, p.second);
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

// One top-level decision or min-defect run. Works on vertex subsets of the
// original graph; induced subgraphs are never materialized.
struct Engine {
    const Graph& g;
    const SolverConfig& cfg;
    SolverStats& stats;
    std::unordered_map<SubproblemKey, bool, SubproblemKeyHash> decision_cache;
    std::unordered_map<SubproblemKey, Defect, SubproblemKeyHash> defect_cache;

    Engine(const Graph& g, const SolverConfig& cfg, SolverStats& stats)
        : g(g), cfg(cfg), stats(stats) {}

    bool decide(const Bitset& sub, const std::vector<std::pair<int, int>>& pairs, int k,
                int depth) {
        ++stats.recursion_nodes;
        stats.max_depth = std::max(stats.max_depth, depth);
        if (pairs.empty()) return sub.none();
        if (k <= 2) return true;  // the promise makes g[sub] complete

        SubproblemKey key{sub, normalize_pairs(pairs)};
        if (auto it = decision_cache.find(key); it != decision_cache.end()) return it->second;

        bool result = decide_uncached(sub, pairs, k, depth);
        decision_cache.emplace(std::move(key), result);
        return result;
    }

    bool decide_uncached(const Bitset& sub, const std::vector<std::pair<int, int>>& pairs, int k,
                         int depth) {
        // Pairs confined to components; a component without a pair cannot be
        // covered.
        auto comps = within::components(g, sub);
        if (comps.size() > 1) {
            std::vector<std::vector<std::pair<int, int>>> comp_pairs(comps.size());
            for (auto [s, t] : pairs) {
                int ci = -1, cj = -1;
                for (int c = 0; c < (int)comps.size(); ++c) {
                    if (comps[c].test(s)) ci = c;
                    if (comps[c].test(t)) cj = c;
                }
                if (ci != cj) return false;
                comp_pairs[ci].push_back({s, t});
            }
            for (int c = 0; c < (int)comps.size(); ++c) {
                if (comp_pairs[c].empty()) return false;  // uncoverable component
                if (!decide(comps[c], comp_pairs[c], k, depth)) return false;
            }
            return true;
        }

        if (within::is_complete(g, sub)) return true;

        int ell = (int)pairs.size();
        CutResult cut = vertex_connectivity_within(g, sub);
        if ((std::uint64_t)cut.connectivity >= g_threshold(k, ell)) return true;
        stats.max_cut_size = std::max(stats.max_cut_size, (int)cut.cut.size());

        auto comps_after = component_sets(sub, cut.cut);
        bool found = false;
        enumerate_plausible_within(
            g, sub, cut.cut, pairs, CutCoverage::exactly_once,
            [&](const ScenarioCollection& coll) {
                ++stats.collections_tried;
                bool good = true;
                for (const auto& q : comps_after) {
                    ReducedInstance red = reduce_component(q, coll);
                    Bitset red_sub(g.vertex_count());
                    for (int v : red.vertices) red_sub.set(v);
                    if (!decide(red_sub, red.pairs, k - 1, depth + 1)) {
                        good = false;
                        break;
                    }
                }
                if (good) {
                    found = true;
                    return false;  // first good collection decides
                }
                return true;
            });
        return found;
    }

    Defect defect(const Bitset& sub, const std::vector<std::pair<int, int>>& pairs, int k,
                  int depth) {
        ++stats.recursion_nodes;
        stats.max_depth = std::max(stats.max_depth, depth);
        if (pairs.empty()) return Defect::finite(sub.count());
        if (k <= 2) return Defect::finite(0);

        SubproblemKey key{sub, normalize_pairs(pairs)};
        if (auto it = defect_cache.find(key); it != defect_cache.end()) return it->second;

        Defect result = defect_uncached(sub, pairs, k, depth);
        defect_cache.emplace(std::move(key), result);
        return result;
    }

    Defect defect_uncached(const Bitset& sub, const std::vector<std::pair<int, int>>& pairs,
                           int k, int depth) {
        auto comps = within::components(g, sub);
        if (comps.size() > 1) {
            std::vector<std::vector<std::pair<int, int>>> comp_pairs(comps.size());
            for (auto [s, t] : pairs) {
                int ci = -1, cj = -1;
                for (int c = 0; c < (int)comps.size(); ++c) {
                    if (comps[c].test(s)) ci = c;
                    if (comps[c].test(t)) cj = c;
                }
                if (ci != cj) return Defect::infinite();  // no linkage at all
                comp_pairs[ci].push_back({s, t});
            }
            Defect total = Defect::finite(0);
            for (int c = 0; c < (int)comps.size(); ++c) {
                // A component without pairs stays wholly uncovered.
                total = total + defect(comps[c], comp_pairs[c], k, depth);
                if (total.is_infinite()) return total;
            }
            return total;
        }

        if (within::is_complete(g, sub)) return Defect::finite(0);

        int ell = (int)pairs.size();
        CutResult cut = vertex_connectivity_within(g, sub);
        if ((std::uint64_t)cut.connectivity >= g_threshold(k, ell)) return Defect::finite(0);
        stats.max_cut_size = std::max(stats.max_cut_size, (int)cut.cut.size());

        auto comps_after = component_sets(sub, cut.cut);
        Defect best = Defect::infinite();
        enumerate_plausible_within(
            g, sub, cut.cut, pairs, CutCoverage::at_most_once,
            [&](const ScenarioCollection& coll) {
                ++stats.collections_tried;
                // Cut vertices not used by any scenario stay uncovered.
                int unused_cut = 0;
                {
                    Bitset on_scenarios(g.vertex_count());
                    for (const auto& s : coll.scenarios)
                        for (int v : s.sequence) on_scenarios.set(v);
                    for (int a : cut.cut)
                        if (!on_scenarios.test(a)) ++unused_cut;
                }
                Defect total = Defect::finite(unused_cut);
                for (const auto& q : comps_after) {
                    ReducedInstance red = reduce_component(q, coll);
                    Bitset red_sub(g.vertex_count());
                    for (int v : red.vertices) red_sub.set(v);
                    total = total + defect(red_sub, red.pairs, k - 1, depth + 1);
                    if (best < total || best == total) break;
                }
                if (total < best) best = total;
                // A defect of zero cannot be improved.
                return !(best == Defect::finite(0));
            });
        return best;
    }

    std::vector<VertexSet> component_sets(const Bitset& sub, const VertexSet& cut) {
        Bitset rest = sub;
        for (int a : cut) rest.reset(a);
        std::vector<VertexSet> out;
        for (const auto& c : within::components(g, rest)) out.push_back(c.to_vector());
        return out;
    }
};

SolverConfig resolved(const Graph& g, const SolverConfig& cfg) {
    SolverConfig c = cfg;
    resolve_promise(g, c);
    return c;
}

}  // namespace

bool ham_linkage(const LinkageInstance& inst, const SolverConfig& cfg, SolverStats* stats) {
    inst.validate();
    SolverConfig c = resolved(inst.graph, cfg);
    SolverStats local;
    Engine engine(inst.graph, c, stats ? *stats : local);
    return engine.decide(inst.graph.full_vertex_set(), inst.pairs, c.k, 0);
}

Defect min_defect(const LinkageInstance& inst, const SolverConfig& cfg, SolverStats* stats) {
    inst.validate();
    SolverConfig c = resolved(inst.graph, cfg);
    SolverStats local;
    Engine engine(inst.graph, c, stats ? *stats : local);
    return engine.defect(inst.graph.full_vertex_set(), inst.pairs, c.k, 0);
}

bool ham_linkedness(const Graph& g, int ell, const SolverConfig& cfg, SolverStats* stats) {
    if (ell < 1) throw PreconditionError("ham_linkedness: ell must be >= 1");
    int n = g.vertex_count();
    if (n < 2 * ell) return false;  // fewer than 2*ell vertices
    SolverConfig c = resolved(g, cfg);
    SolverStats local;
    Engine engine(g, c, stats ? *stats : local);
    Bitset all = g.full_vertex_set();

    // Unordered pairings suffice: the decision is invariant under swapping
    // pair ends and permuting pairs.
    std::vector<int> terminals;
    std::vector<std::pair<int, int>> pairing;
    bool ok = true;
    auto pairings = [&](auto&& self, std::vector<int> rest) -> void {
        if (!ok) return;
        if (rest.empty()) {
            if (!engine.decide(all, pairing, c.k, 0)) ok = false;
            return;
        }
        int a = rest.front();
        for (std::size_t j = 1; j < rest.size(); ++j) {
            std::vector<int> next;
            for (std::size_t t = 1; t < rest.size(); ++t)
                if (t != j) next.push_back(rest[t]);
            pairing.push_back({a, rest[j]});
            self(self, std::move(next));
            pairing.pop_back();
            if (!ok) return;
        }
    };
    auto choose = [&](auto&& self, int from, int need) -> void {
        if (!ok) return;
        if (need == 0) {
            pairings(pairings, terminals);
            return;
        }
        for (int v = from; v + need <= n; ++v) {
            terminals.push_back(v);
            self(self, v + 1, need - 1);
            terminals.pop_back();
            if (!ok) return;
        }
    };
    choose(choose, 0, 2 * ell);
    return ok;
}

bool path_cover_exists(const Graph& g, int ell, const SolverConfig& cfg, SolverStats* stats) {
    if (ell < 0) throw PreconditionError("path_cover_exists: ell must be >= 0");
    int n = g.vertex_count();
    if (ell == 0) return n == 0;
    if (ell > n) return false;
    SolverConfig c = resolved(g, cfg);
    SolverStats local;
    SolverStats& st = stats ? *stats : local;

    // Each cover consists of some single-vertex paths plus a linkage of
    // distinct terminal pairs on the rest. Singles are enumerated at the top
    // level only.
    std::vector<int> singles;
    bool found = false;

    auto try_linkages = [&](const Bitset& rest, int pairs_needed) {
        Engine engine(g, c, st);
        if (pairs_needed == 0) {
            if (rest.none()) found = true;
            return;
        }
        std::vector<int> verts = rest.to_vector();
        if ((int)verts.size() < 2 * pairs_needed) return;
        std::vector<int> terminals;
        std::vector<std::pair<int, int>> pairing;
        auto pairings = [&](auto&& self, std::vector<int> remaining) -> void {
            if (found) return;
            if (remaining.empty()) {
                if (engine.decide(rest, pairing, c.k, 0)) found = true;
                return;
            }
            int a = remaining.front();
            for (std::size_t j = 1; j < remaining.size(); ++j) {
                std::vector<int> next;
                for (std::size_t t = 1; t < remaining.size(); ++t)
                    if (t != j) next.push_back(remaining[t]);
                pairing.push_back({a, remaining[j]});
                self(self, std::move(next));
                pairing.pop_back();
                if (found) return;
            }
        };
        auto choose = [&](auto&& self, std::size_t from, int need) -> void {
            if (found) return;
            if (need == 0) {
                pairings(pairings, terminals);
                return;
            }
            for (std::size_t i = from; i + need <= verts.size(); ++i) {
                terminals.push_back(verts[i]);
                self(self, i + 1, need - 1);
                terminals.pop_back();
                if (found) return;
            }
        };
        choose(choose, 0, 2 * pairs_needed);
    };

    auto choose_singles = [&](auto&& self, int from, int count) -> void {
        if (found) return;
        if (count == 0) {
            Bitset rest = g.full_vertex_set();
            for (int v : singles) rest.reset(v);
            try_linkages(rest, ell - (int)singles.size());
            return;
        }
        for (int v = from; v + count <= n; ++v) {
            singles.push_back(v);
            self(self, v + 1, count - 1);
            singles.pop_back();
            if (found) return;
        }
    };
    for (int j = 0; j <= ell && !found; ++j) choose_singles(choose_singles, 0, j);
    return found;
}

int path_cover_number(const Graph& g, const SolverConfig& cfg, SolverStats* stats) {
    if (g.vertex_count() == 0) return 0;
    SolverConfig c = resolved(g, cfg);
    auto comps = connected_components(g);
    int total = 0;
    for (const auto& comp : comps) {
        auto sub = induced_subgraph(g, comp);
        SolverConfig cc = c;
        cc.verify_promise = false;  // alpha of an induced subgraph cannot grow
        for (int ell = 1;; ++ell) {
            if (ell > (int)comp.size())
                throw InvariantViolation("path_cover_number: no cover found");
            if (path_cover_exists(sub.graph, ell, cc, stats)) {
                total += ell;
                break;
            }
        }
    }
    return total;
}

namespace {

bool pair_linkage_true(Engine& engine, const Graph& g, int k, int u, int v) {
    std::vector<std::pair<int, int>> pairs{{u, v}};
    return engine.decide(g.full_vertex_set(), pairs, k, 0);
}

}  // namespace

bool ham_path(const Graph& g, const SolverConfig& cfg, SolverStats* stats) {
    int n = g.vertex_count();
    if (n == 0) return false;
    if (n == 1) return true;
    SolverConfig c = resolved(g, cfg);
    SolverStats local;
    Engine engine(g, c, stats ? *stats : local);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (pair_linkage_true(engine, g, c.k, u, v)) return true;
    return false;
}

bool ham_cycle(const Graph& g, const SolverConfig& cfg, SolverStats* stats) {
    int n = g.vertex_count();
    if (n < 3) return false;
    SolverConfig c = resolved(g, cfg);
    SolverStats local;
    Engine engine(g, c, stats ? *stats : local);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            if (u < v && pair_linkage_true(engine, g, c.k, u, v)) return true;
    return false;
}

bool ham_connected(const Graph& g, const SolverConfig& cfg, SolverStats* stats) {
    int n = g.vertex_count();
    if (n == 0) return false;
    if (n == 1) return true;
    SolverConfig c = resolved(g, cfg);
    SolverStats local;
    Engine engine(g, c, stats ? *stats : local);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!pair_linkage_true(engine, g, c.k, u, v)) return false;
    return true;
}

}  // namespace hamlink
