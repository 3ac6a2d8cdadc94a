#include "hamlink/construct.hpp"

#include <algorithm>
#include <map>

#include "hamlink/connectivity.hpp"

namespace hamlink {

namespace {

Bitset covered_set(const Graph& g, const Linkage& l) {
    Bitset covered(g.vertex_count());
    for (const auto& p : l.paths)
        for (int v : p) covered.set(v);
    return covered;
}

std::vector<std::pair<int, int>> endpoints_of(const Linkage& l) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& p : l.paths) pairs.push_back({p.front(), p.back()});
    return pairs;
}

// Positions of fan endpoints along one path, in path order.
struct PathHits {
    std::vector<int> positions;   // indices into the path
    std::vector<int> fan_index;   // parallel: which fan path ends there
};

}  // namespace

Linkage augment_linkage(const Graph& g, int k, int ell, Linkage current) {
    if (k < 2 || ell < 1) throw PreconditionError("augment_linkage: requires k >= 2, ell >= 1");
    if ((int)current.paths.size() != ell)
        throw PreconditionError("augment_linkage: linkage has wrong path count");
    if (!linkage_is_valid(g, endpoints_of(current), current, false))
        throw PreconditionError("augment_linkage: input linkage is not valid");

    int n = g.vertex_count();
    for (int iteration = 0; iteration <= n; ++iteration) {
        Bitset covered = covered_set(g, current);
        int covered_count = covered.count();
        if (covered_count == n) return current;

        int x = 0;
        while (covered.test(x)) ++x;

        Fan fan = menger_fan(g, x, covered.to_vector(), k * ell);
        int m = (int)fan.paths.size();

        // Index the fan by its endpoint.
        std::vector<int> fan_at(n, -1);
        for (int f = 0; f < m; ++f) fan_at[fan.paths[f].back()] = f;

        auto splice_after = [&](std::vector<int>& path, int pos, int fan_a, int fan_b) {
            // path[0..pos], reverse of fan a without its endpoint (so it ends
            // at x), interior of fan b, path[pos+1..]. Fan paths run from x
            // into the covered set; path[pos] and path[pos+1] are the two
            // fan endpoints.
            std::vector<int> next(path.begin(), path.begin() + pos + 1);
            const auto& ra = fan.paths[fan_a];
            for (int i = (int)ra.size() - 2; i >= 0; --i) next.push_back(ra[i]);
            const auto& rb = fan.paths[fan_b];
            for (std::size_t i = 1; i + 1 < rb.size(); ++i) next.push_back(rb[i]);
            next.insert(next.end(), path.begin() + pos + 1, path.end());
            path = std::move(next);
        };

        bool rewritten = false;
        if (m == covered_count) {
            // Every covered vertex is a fan endpoint: insert x between the
            // first two vertices of the first path.
            auto& path = current.paths[0];
            splice_after(path, 0, fan_at[path[0]], fan_at[path[1]]);
            rewritten = true;
        } else {
            // Some path hosts at least k fan endpoints.
            int host = -1;
            PathHits hits;
            for (int i = 0; i < ell && host < 0; ++i) {
                PathHits h;
                const auto& path = current.paths[i];
                for (int pos = 0; pos < (int)path.size(); ++pos) {
                    if (fan_at[path[pos]] >= 0) {
                        h.positions.push_back(pos);
                        h.fan_index.push_back(fan_at[path[pos]]);
                    }
                }
                if ((int)h.positions.size() >= k) {
                    host = i;
                    hits = std::move(h);
                }
            }
            if (host < 0)
                throw InvariantViolation(
                    "augment_linkage: no path hosts k fan endpoints; preconditions violated");

            auto& path = current.paths[host];
            // Successors of the first k-1 endpoints.
            std::vector<int> succ;
            for (int j = 0; j < k - 1; ++j) succ.push_back(path[hits.positions[j] + 1]);

            // Rewrite (ii): x adjacent to a successor.
            for (int j = 0; j < k - 1 && !rewritten; ++j) {
                if (g.has_edge(x, succ[j])) {
                    int pos = hits.positions[j];
                    int f = hits.fan_index[j];
                    // path[0..pos], reverse fan, x, successor onwards.
                    std::vector<int> next(path.begin(), path.begin() + pos + 1);
                    const auto& r = fan.paths[f];
                    for (int i = (int)r.size() - 2; i >= 0; --i) next.push_back(r[i]);
                    next.insert(next.end(), path.begin() + pos + 1, path.end());
                    path = std::move(next);
                    rewritten = true;
                }
            }
            // Rewrite (iii): two successors adjacent; detour through x and a
            // reversed middle segment.
            for (int a = 0; a < k - 1 && !rewritten; ++a) {
                for (int b = a + 1; b < k - 1 && !rewritten; ++b) {
                    if (!g.has_edge(succ[a], succ[b])) continue;
                    int pos_a = hits.positions[a], pos_b = hits.positions[b];
                    std::vector<int> next(path.begin(), path.begin() + pos_a + 1);
                    const auto& ra = fan.paths[hits.fan_index[a]];
                    for (int i = (int)ra.size() - 2; i >= 0; --i) next.push_back(ra[i]);
                    const auto& rb = fan.paths[hits.fan_index[b]];
                    for (std::size_t i = 1; i < rb.size(); ++i) next.push_back(rb[i]);
                    // Back from just before p_b down to the successor of p_a,
                    // then across the edge succ[a]-succ[b] and onwards.
                    for (int i = pos_b - 1; i >= pos_a + 1; --i) next.push_back(path[i]);
                    next.insert(next.end(), path.begin() + pos_b + 1, path.end());
                    path = std::move(next);
                    rewritten = true;
                }
            }
            if (!rewritten)
                throw InvariantViolation(
                    "augment_linkage: no rewrite applies at uncovered vertex " +
                    std::to_string(x) + "; preconditions violated");
        }

        Bitset after = covered_set(g, current);
        if (after.count() <= covered_count)
            throw InvariantViolation("augment_linkage: covered-vertex count did not increase");
        if (!linkage_is_valid(g, endpoints_of(current), current, false))
            throw InvariantViolation("augment_linkage: rewrite produced an invalid linkage");
    }
    throw InvariantViolation("augment_linkage: exceeded n iterations");
}

namespace {

struct Constructor {
    const Graph& g;
    const SolverConfig& cfg;
    SolverStats& stats;

    std::optional<Linkage> build(const Bitset& sub, const std::vector<std::pair<int, int>>& pairs,
                                 int k, int depth) {
        ++stats.recursion_nodes;
        stats.max_depth = std::max(stats.max_depth, depth);
        if (pairs.empty()) {
            if (sub.none()) return Linkage{};
            return std::nullopt;
        }
        if (k <= 2 || within::is_complete(g, sub)) return complete_case(sub, pairs);

        auto comps = within::components(g, sub);
        if (comps.size() > 1) return split_case(comps, sub, pairs, k, depth);

        int ell = (int)pairs.size();
        CutResult cut = vertex_connectivity_within(g, sub);
        if ((std::uint64_t)cut.connectivity >= g_threshold(k, ell))
            return high_connectivity_case(sub, pairs, k);
        stats.max_cut_size = std::max(stats.max_cut_size, (int)cut.cut.size());

        Bitset rest = sub;
        for (int a : cut.cut) rest.reset(a);
        std::vector<VertexSet> comp_sets;
        for (const auto& c : within::components(g, rest)) comp_sets.push_back(c.to_vector());

        std::optional<Linkage> result;
        enumerate_plausible_within(
            g, sub, cut.cut, pairs, CutCoverage::exactly_once,
            [&](const ScenarioCollection& coll) {
                ++stats.collections_tried;
                // Component witnesses, keyed by derived pair.
                std::map<std::pair<int, int>, std::vector<int>> piece;
                for (const auto& q : comp_sets) {
                    ReducedInstance red = reduce_component(q, coll);
                    Bitset red_sub(g.vertex_count());
                    for (int v : red.vertices) red_sub.set(v);
                    auto witness = build(red_sub, red.pairs, k - 1, depth + 1);
                    if (!witness) return true;  // next collection
                    for (std::size_t j = 0; j < red.pairs.size(); ++j)
                        piece[red.pairs[j]] = witness->paths[j];
                }
                result = stitch(coll, piece);
                return false;  // first good collection defines the witness
            });
        return result;
    }

    Linkage complete_case(const Bitset& sub, const std::vector<std::pair<int, int>>& pairs) {
        Bitset leftover = sub;
        for (auto [s, t] : pairs) {
            leftover.reset(s);
            leftover.reset(t);
        }
        Linkage l;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            std::vector<int> path{pairs[i].first};
            if (i == 0)
                for (int v = leftover.next(0); v >= 0; v = leftover.next(v + 1)) path.push_back(v);
            path.push_back(pairs[i].second);
            l.paths.push_back(std::move(path));
        }
        return l;
    }

    std::optional<Linkage> split_case(const std::vector<Bitset>& comps, const Bitset& sub,
                                      const std::vector<std::pair<int, int>>& pairs, int k,
                                      int depth) {
        (void)sub;
        std::vector<std::vector<int>> pair_idx(comps.size());
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            int ci = -1, cj = -1;
            for (int c = 0; c < (int)comps.size(); ++c) {
                if (comps[c].test(pairs[p].first)) ci = c;
                if (comps[c].test(pairs[p].second)) cj = c;
            }
            if (ci != cj) return std::nullopt;
            pair_idx[ci].push_back((int)p);
        }
        Linkage merged;
        merged.paths.resize(pairs.size());
        for (int c = 0; c < (int)comps.size(); ++c) {
            if (pair_idx[c].empty()) return std::nullopt;
            std::vector<std::pair<int, int>> local;
            for (int p : pair_idx[c]) local.push_back(pairs[p]);
            auto witness = build(comps[c], local, k, depth);
            if (!witness) return std::nullopt;
            for (std::size_t j = 0; j < local.size(); ++j)
                merged.paths[pair_idx[c][j]] = witness->paths[j];
        }
        return merged;
    }

    std::optional<Linkage> high_connectivity_case(const Bitset& sub,
                                                  const std::vector<std::pair<int, int>>& pairs,
                                                  int k) {
        auto verts = sub.to_vector();
        if ((int)verts.size() > kMaxInitialLinkageSearch)
            throw SizeGuardError("construct_ham_linkage: initial-linkage search refused at n = " +
                                 std::to_string(verts.size()));
        auto ind = induced_subgraph(g, verts);
        LinkageInstance local{ind.graph, {}};
        for (auto [s, t] : pairs) local.pairs.push_back({ind.to_sub[s], ind.to_sub[t]});
        OracleLimits limits = cfg.oracle;
        limits.max_backtrack_n = kMaxInitialLinkageSearch;
        auto initial = oracle_linkage(local, false, limits);
        if (!initial)
            throw InvariantViolation(
                "construct_ham_linkage: no initial linkage in a highly connected graph");
        Linkage full = augment_linkage(ind.graph, k, (int)pairs.size(), *initial);
        for (auto& path : full.paths)
            for (int& v : path) v = ind.to_parent[v];
        return full;
    }

    Linkage stitch(const ScenarioCollection& coll,
                   const std::map<std::pair<int, int>, std::vector<int>>& piece) {
        Linkage out;
        for (const auto& s : coll.scenarios) {
            const auto& seq = s.sequence;
            std::vector<int> path{seq[0]};
            for (std::size_t j = 1; j < seq.size(); ++j) {
                int u = seq[j - 1], v = seq[j];
                int cu = coll.component_of[u], cv = coll.component_of[v];
                if (cu >= 0 && cu == cv) {
                    auto it = piece.find({u, v});
                    if (it == piece.end())
                        throw InvariantViolation("construct_ham_linkage: missing component piece");
                    path.insert(path.end(), it->second.begin() + 1, it->second.end());
                } else {
                    path.push_back(v);
                }
            }
            out.paths.push_back(std::move(path));
        }
        return out;
    }
};

}  // namespace

std::optional<Linkage> construct_ham_linkage(const LinkageInstance& inst, const SolverConfig& cfg,
                                             SolverStats* stats) {
    inst.validate();
    SolverConfig c = cfg;
    resolve_promise(inst.graph, c);
    SolverStats local;
    Constructor builder{inst.graph, c, stats ? *stats : local};
    auto result = builder.build(inst.graph.full_vertex_set(), inst.pairs, c.k, 0);
    if (result && !linkage_is_valid(inst.graph, inst.pairs, *result, true))
        throw InvariantViolation("construct_ham_linkage: assembled witness failed validation");
    return result;
}

}  // namespace hamlink
