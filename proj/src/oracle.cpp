#include "hamlink/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace hamlink {

namespace {

// Backtracking search over partial linkages. The lowest-indexed unfinished
// path is extended from its current endpoint, neighbors tried in increasing
// id, which makes the first witness deterministic.
struct LinkageSearch {
    const Graph& g;
    const std::vector<std::pair<int, int>>& pairs;
    bool require_hamiltonian;
    bool find_all_coverages;  // min-defect mode: keep searching for better coverage

    std::vector<std::vector<int>> paths;
    std::vector<bool> finished;
    int unfinished_count = 0;
    Bitset used;
    Bitset pending_targets;  // targets of unfinished paths, not yet placed

    std::optional<Linkage> witness;
    int best_uncovered;  // min-defect mode
    bool found_any = false;

    LinkageSearch(const Graph& g, const std::vector<std::pair<int, int>>& pairs,
                  bool require_ham, bool min_defect_mode)
        : g(g), pairs(pairs), require_hamiltonian(require_ham),
          find_all_coverages(min_defect_mode), used(g.vertex_count()),
          pending_targets(g.vertex_count()), best_uncovered(g.vertex_count() + 1) {
        paths.resize(pairs.size());
        finished.assign(pairs.size(), false);
        unfinished_count = (int)pairs.size();
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            paths[i].push_back(pairs[i].first);
            used.set(pairs[i].first);
            pending_targets.set(pairs[i].second);
        }
    }

    // Free vertices (not on any path) plus feasibility pruning:
    //  - every pending target must be reachable from its own endpoint through
    //    free vertices;
    //  - when coverage matters, bounds the best achievable coverage by what
    //    is reachable from the active endpoints.
    // Returns false when the branch is hopeless; fills reachable count.
    bool prune(int* reachable_free) {
        int n = g.vertex_count();
        Bitset free(n);
        for (int v = 0; v < n; ++v)
            if (!used.test(v)) free.set(v);

        // Components of g[free].
        std::vector<int> comp_of(n, -1);
        auto comps = within::components(g, free);
        for (int c = 0; c < (int)comps.size(); ++c)
            for (int v = comps[c].next(0); v >= 0; v = comps[c].next(v + 1)) comp_of[v] = c;

        // Which components touch at least one active endpoint / which touch
        // the endpoint of path i.
        std::vector<bool> comp_active(comps.size(), false);
        int reach = 0;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (finished[i]) continue;
            int u = paths[i].back();
            int t = pairs[i].second;
            bool target_ok = g.has_edge(u, t);
            Bitset nbrs = g.row(u) & free;
            for (int w = nbrs.next(0); w >= 0; w = nbrs.next(w + 1)) {
                comp_active[comp_of[w]] = true;
                if (comp_of[w] == comp_of[t]) target_ok = true;
            }
            if (!target_ok) return false;
        }
        for (int c = 0; c < (int)comps.size(); ++c)
            if (comp_active[c]) reach += comps[c].count();
        *reachable_free = reach;
        if (require_hamiltonian && !find_all_coverages && reach != free.count()) return false;
        return true;
    }

    void record_complete() {
        found_any = true;
        int uncovered = g.vertex_count() - used.count();
        if (find_all_coverages) {
            if (uncovered < best_uncovered) {
                best_uncovered = uncovered;
                witness = Linkage{paths};
            }
            return;
        }
        if (!require_hamiltonian || uncovered == 0) witness = Linkage{paths};
    }

    bool done() const {
        if (find_all_coverages) return best_uncovered == 0;
        return witness.has_value();
    }

    void search() {
        if (unfinished_count == 0) {
            record_complete();
            return;
        }
        int reach = 0;
        if (!prune(&reach)) return;
        if (find_all_coverages) {
            int lower = g.vertex_count() - used.count() - reach;
            if (lower >= best_uncovered) return;
        }
        int i = 0;
        while (finished[i]) ++i;
        int u = paths[i].back();
        int t = pairs[i].second;
        for (int v : g.neighbors(u)) {
            if (v == t) {
                finished[i] = true;
                --unfinished_count;
                used.set(v);
                pending_targets.reset(v);
                paths[i].push_back(v);
                search();
                paths[i].pop_back();
                pending_targets.set(v);
                used.reset(v);
                ++unfinished_count;
                finished[i] = false;
            } else if (!used.test(v) && !pending_targets.test(v)) {
                used.set(v);
                paths[i].push_back(v);
                search();
                paths[i].pop_back();
                used.reset(v);
            }
            if (done()) return;
        }
    }
};

// Subset DP for paths with a fixed start: table[mask] = bitmask of final
// vertices of paths that start at `s` and cover exactly `mask`.
std::vector<std::uint32_t> dp_from(const Graph& g, int s) {
    int n = g.vertex_count();
    std::vector<std::uint32_t> dp(std::size_t{1} << n, 0);
    dp[std::uint32_t{1} << s] = std::uint32_t{1} << s;
    std::vector<std::uint32_t> adj(n);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) adj[v] |= std::uint32_t{1} << u;
    for (std::uint32_t mask = 1; mask < dp.size(); ++mask) {
        std::uint32_t ends = dp[mask];
        while (ends) {
            int v = __builtin_ctz(ends);
            ends &= ends - 1;
            std::uint32_t ext = adj[v] & ~mask;
            while (ext) {
                int u = __builtin_ctz(ext);
                ext &= ext - 1;
                dp[mask | (std::uint32_t{1} << u)] |= std::uint32_t{1} << u;
            }
        }
    }
    return dp;
}

std::optional<Linkage> single_pair_dp(const Graph& g, int s, int t) {
    int n = g.vertex_count();
    auto dp = dp_from(g, s);
    std::uint32_t full = (n == 32) ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
    if (!((dp[full] >> t) & 1)) return std::nullopt;
    // Walk backwards, taking the smallest feasible predecessor.
    std::vector<int> path{t};
    std::uint32_t mask = full;
    int cur = t;
    while (cur != s || mask != (std::uint32_t{1} << s)) {
        std::uint32_t rest = mask & ~(std::uint32_t{1} << cur);
        int pred = -1;
        for (int u : g.neighbors(cur)) {
            if ((rest >> u) & 1 && ((dp[rest] >> u) & 1)) {
                pred = u;
                break;
            }
        }
        if (pred < 0) throw InvariantViolation("single_pair_dp: witness reconstruction failed");
        path.push_back(pred);
        mask = rest;
        cur = pred;
    }
    std::reverse(path.begin(), path.end());
    return Linkage{{path}};
}

}  // namespace

std::vector<std::uint32_t> ham_path_dp_from(const Graph& g, int u) {
    if (g.vertex_count() > 20) throw SizeGuardError("ham_path_dp_from: n > 20");
    if (u < 0 || u >= g.vertex_count()) throw PreconditionError("ham_path_dp_from: bad vertex");
    return dp_from(g, u);
}

std::vector<std::uint32_t> ham_path_dp(const Graph& g) {
    int n = g.vertex_count();
    if (n > 20) throw SizeGuardError("ham_path_dp: n > 20");
    std::vector<std::uint32_t> dp(std::size_t{1} << n, 0);
    std::vector<std::uint32_t> adj(n);
    for (int v = 0; v < n; ++v) {
        for (int u : g.neighbors(v)) adj[v] |= std::uint32_t{1} << u;
        dp[std::uint32_t{1} << v] = std::uint32_t{1} << v;
    }
    for (std::uint32_t mask = 1; mask < dp.size(); ++mask) {
        std::uint32_t ends = dp[mask];
        while (ends) {
            int v = __builtin_ctz(ends);
            ends &= ends - 1;
            std::uint32_t ext = adj[v] & ~mask;
            while (ext) {
                int u = __builtin_ctz(ext);
                ext &= ext - 1;
                dp[mask | (std::uint32_t{1} << u)] |= std::uint32_t{1} << u;
            }
        }
    }
    return dp;
}

bool dp_has_ham_path(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return false;
    auto dp = ham_path_dp(g);
    return dp.back() != 0;
}

bool dp_has_ham_path_from(const Graph& g, int u) {
    auto dp = ham_path_dp(g);
    return (dp.back() >> u) & 1;
}

bool dp_has_ham_path_between(const Graph& g, int u, int v) {
    int n = g.vertex_count();
    if (n > 20) throw SizeGuardError("dp_has_ham_path_between: n > 20");
    if (n == 1) return u == v;
    auto dp = dp_from(g, u);
    return (dp.back() >> v) & 1;
}

bool dp_has_pc_pair(const Graph& g, int u, int v) {
    int n = g.vertex_count();
    if (n > 20) throw SizeGuardError("dp_has_pc_pair: n > 20");
    if (u == v) throw PreconditionError("dp_has_pc_pair: u == v");
    auto du = dp_from(g, u);
    auto dv = dp_from(g, v);
    std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::uint32_t ubit = std::uint32_t{1} << u, vbit = std::uint32_t{1} << v;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        if (!(mask & ubit) || (mask & vbit)) continue;
        if (du[mask] && dv[full ^ mask]) return true;
    }
    return false;
}

std::optional<Linkage> oracle_linkage(const LinkageInstance& inst, bool require_hamiltonian,
                                      const OracleLimits& limits) {
    inst.validate();
    const Graph& g = inst.graph;
    int n = g.vertex_count();
    if (inst.ell() == 0) {
        if (require_hamiltonian && n != 0) return std::nullopt;
        return Linkage{};
    }
    if (inst.ell() == 1 && !require_hamiltonian) {
        // Any s-t path will do; BFS.
        auto [s, t] = inst.pairs[0];
        std::vector<int> parent(n, -1);
        std::vector<int> queue{s};
        parent[s] = s;
        for (std::size_t qi = 0; qi < queue.size() && parent[t] == -1; ++qi)
            for (int w : g.neighbors(queue[qi]))
                if (parent[w] == -1) {
                    parent[w] = queue[qi];
                    queue.push_back(w);
                }
        if (parent[t] == -1) return std::nullopt;
        std::vector<int> path;
        for (int v = t; v != s; v = parent[v]) path.push_back(v);
        path.push_back(s);
        std::reverse(path.begin(), path.end());
        return Linkage{{path}};
    }
    if (inst.ell() == 1 && require_hamiltonian && n <= limits.max_dp_n)
        return single_pair_dp(g, inst.pairs[0].first, inst.pairs[0].second);
    if (n > limits.max_backtrack_n)
        throw SizeGuardError("oracle_linkage: n = " + std::to_string(n) + " exceeds guard " +
                             std::to_string(limits.max_backtrack_n));
    LinkageSearch search(g, inst.pairs, require_hamiltonian, false);
    search.search();
    return search.witness;
}

Defect oracle_min_defect(const LinkageInstance& inst, const OracleLimits& limits) {
    inst.validate();
    int n = inst.graph.vertex_count();
    if (inst.ell() == 0) return Defect::finite(n);
    if (n > limits.max_backtrack_n)
        throw SizeGuardError("oracle_min_defect: n = " + std::to_string(n) + " exceeds guard " +
                             std::to_string(limits.max_backtrack_n));
    LinkageSearch search(inst.graph, inst.pairs, false, true);
    search.search();
    if (!search.found_any) return Defect::infinite();
    return Defect::finite(search.best_uncovered);
}

int oracle_path_cover_number(const Graph& g, const OracleLimits& limits) {
    int n = g.vertex_count();
    if (n == 0) return 0;
    if (n > limits.max_dp_n || n > 16)
        throw SizeGuardError("oracle_path_cover_number: n = " + std::to_string(n) +
                             " exceeds guard");
    auto dp = ham_path_dp(g);
    std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<int> cover(full + 1, n + 1);
    cover[0] = 0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        int low = __builtin_ctz(mask);
        std::uint32_t lowbit = std::uint32_t{1} << low;
        std::uint32_t rest = mask ^ lowbit;
        // Path masks p with low in p, p subset of mask.
        for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
            std::uint32_t p = sub | lowbit;
            if (dp[p]) cover[mask] = std::min(cover[mask], 1 + cover[mask ^ p]);
            if (sub == 0) break;
        }
    }
    return cover[full];
}

bool oracle_is_ham_linked(const Graph& g, int ell, const OracleLimits& limits) {
    int n = g.vertex_count();
    if (ell < 1) throw PreconditionError("oracle_is_ham_linked: ell must be >= 1");
    if (n < 2 * ell) return false;
    if (ell == 1) {
        if (n > limits.max_dp_n) throw SizeGuardError("oracle_is_ham_linked: n exceeds guard");
        std::uint32_t full = (std::uint32_t{1} << n) - 1;
        for (int u = 0; u < n; ++u) {
            auto dp = dp_from(g, u);
            for (int v = u + 1; v < n; ++v)
                if (!((dp[full] >> v) & 1)) return false;
        }
        return true;
    }
    if (n > limits.max_backtrack_n)
        throw SizeGuardError("oracle_is_ham_linked: n exceeds guard");
    // Enumerate unordered pairings of 2*ell distinct terminals; answers are
    // invariant under swapping the ends of a pair and permuting pairs.
    std::vector<int> terminals;
    std::vector<std::pair<int, int>> pairing;
    bool ok = true;

    auto check_pairings = [&](auto&& self, std::vector<int> rest) -> void {
        if (!ok) return;
        if (rest.empty()) {
            LinkageInstance inst{g, pairing};
            if (!oracle_linkage(inst, true, limits)) ok = false;
            return;
        }
        int a = rest.front();
        for (std::size_t j = 1; j < rest.size(); ++j) {
            std::vector<int> next;
            for (std::size_t k = 1; k < rest.size(); ++k)
                if (k != j) next.push_back(rest[k]);
            pairing.push_back({a, rest[j]});
            self(self, std::move(next));
            pairing.pop_back();
            if (!ok) return;
        }
    };

    auto choose = [&](auto&& self, int from, int need) -> void {
        if (!ok) return;
        if (need == 0) {
            check_pairings(check_pairings, terminals);
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

int oracle_lambda(const Graph& g, bool injective, const OracleLimits& limits) {
    int n = g.vertex_count();
    if (n == 0) return 0;
    if (n > limits.max_lambda_n)
        throw SizeGuardError("oracle_lambda: n = " + std::to_string(n) + " exceeds guard " +
                             std::to_string(limits.max_lambda_n));

    // Distance-two pairs: non-adjacent with a common neighbor.
    std::vector<Bitset> dist2(n, Bitset(n));
    for (int u = 0; u < n; ++u) {
        Bitset reach(n);
        for (int w : g.neighbors(u)) reach |= g.row(w);
        reach.subtract(g.row(u));
        reach.reset(u);
        dist2[u] = reach;
    }

    // Try vertices in order of decreasing degree; labels are checked against
    // already-assigned neighbors only.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });

    std::vector<int> label(n, -1);
    auto feasible = [&](int v, int lab) {
        for (int u : g.neighbors(v))
            if (label[u] >= 0 && std::abs(label[u] - lab) < 2) return false;
        for (int u = dist2[v].next(0); u >= 0; u = dist2[v].next(u + 1))
            if (label[u] >= 0 && label[u] == lab) return false;
        return true;
    };

    std::vector<bool> taken;
    auto search = [&](auto&& self, int idx, int max_label) -> bool {
        if (idx == n) return true;
        int v = order[idx];
        // Label reversal symmetry: pin the first vertex to the lower half.
        int hi = (idx == 0) ? max_label / 2 : max_label;
        for (int lab = 0; lab <= hi; ++lab) {
            if (injective && taken[lab]) continue;
            if (!feasible(v, lab)) continue;
            label[v] = lab;
            if (injective) taken[lab] = true;
            if (self(self, idx + 1, max_label)) return true;
            if (injective) taken[lab] = false;
            label[v] = -1;
        }
        return false;
    };

    for (int k = 0; k <= 2 * n; ++k) {
        taken.assign(k + 1, false);
        std::fill(label.begin(), label.end(), -1);
        if (search(search, 0, k)) return k;
    }
    throw InvariantViolation("oracle_lambda: no labelling found below the 2n bound");
}

}  // namespace hamlink
