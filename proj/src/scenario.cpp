#include "hamlink/scenario.hpp"

#include <algorithm>

namespace hamlink {

namespace {

ScenarioCollection make_partition_within(const Graph& g, const Bitset& sub, const VertexSet& cut) {
    ScenarioCollection c;
    c.cut = cut;
    std::sort(c.cut.begin(), c.cut.end());
    c.component_of.assign(g.vertex_count(), -2);
    Bitset rest = sub;
    for (int a : cut) {
        if (!sub.test(a)) throw PreconditionError("cut vertex outside the working set");
        rest.reset(a);
        c.component_of[a] = -1;
    }
    auto comps = within::components(g, rest);
    c.component_count = (int)comps.size();
    for (int i = 0; i < (int)comps.size(); ++i)
        for (int v = comps[i].next(0); v >= 0; v = comps[i].next(v + 1)) c.component_of[v] = i;
    return c;
}

}  // namespace

ScenarioCollection make_partition(const Graph& g, const VertexSet& cut) {
    return make_partition_within(g, g.full_vertex_set(), cut);
}

bool is_scenario_sequence(const ScenarioCollection& partition, const Scenario& s) {
    const auto& seq = s.sequence;
    if (seq.size() < 2) return false;
    if (seq.front() != s.terminals.first || seq.back() != s.terminals.second) return false;
    const auto& comp = partition.component_of;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        int cu = comp[seq[i]], cv = comp[seq[i + 1]];
        if (cu == -2 || cv == -2) return false;
        if (cu >= 0 && cv >= 0 && cu != cv) return false;
        if (cu >= 0 && cv >= 0 && i + 2 < seq.size() && comp[seq[i + 2]] == cu) return false;
    }
    return true;
}

bool is_plausible(const ScenarioCollection& c, const Graph& g, CutCoverage coverage) {
    std::vector<int> occurrences(g.vertex_count(), 0);
    for (const auto& s : c.scenarios) {
        for (std::size_t i = 0; i < s.sequence.size(); ++i) {
            int v = s.sequence[i];
            if (v < 0 || v >= g.vertex_count()) return false;
            ++occurrences[v];
            if (i + 1 < s.sequence.size()) {
                int u = s.sequence[i], w = s.sequence[i + 1];
                bool same_component =
                    c.component_of[u] >= 0 && c.component_of[u] == c.component_of[w];
                if (!same_component && !g.has_edge(u, w)) return false;
            }
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (c.component_of[v] == -1) {
            if (coverage == CutCoverage::exactly_once && occurrences[v] != 1) return false;
            if (coverage == CutCoverage::at_most_once && occurrences[v] > 1) return false;
        } else {
            if (occurrences[v] > 1) return false;
        }
    }
    return true;
}

namespace {

struct Enumerator {
    const Graph& g;
    const Bitset& sub;
    const std::vector<std::pair<int, int>>& pairs;
    CutCoverage coverage;
    const std::function<bool(const ScenarioCollection&)>& visit;

    ScenarioCollection partition;      // cut + component bookkeeping, scenarios filled per yield
    std::vector<Bitset> comp_sets;     // vertices of each component
    Bitset cut_set;
    Bitset used;                       // vertices placed so far
    Bitset reserved;                   // terminals not yet placed (other than by their own pair)
    std::vector<std::vector<int>> seqs;
    int cut_remaining = 0;
    bool keep_going = true;

    Enumerator(const Graph& g, const Bitset& sub, const VertexSet& cut,
               const std::vector<std::pair<int, int>>& pairs, CutCoverage coverage,
               const std::function<bool(const ScenarioCollection&)>& visit)
        : g(g), sub(sub), pairs(pairs), coverage(coverage), visit(visit),
          cut_set(g.vertex_count()), used(g.vertex_count()), reserved(g.vertex_count()) {
        partition = make_partition_within(g, sub, cut);
        comp_sets.assign(partition.component_count, Bitset(g.vertex_count()));
        for (int v = sub.next(0); v >= 0; v = sub.next(v + 1))
            if (partition.component_of[v] >= 0) comp_sets[partition.component_of[v]].set(v);
        for (int a : partition.cut) cut_set.set(a);
        cut_remaining = (int)partition.cut.size();
        seqs.resize(pairs.size());
        for (auto [s, t] : pairs) {
            if (!sub.test(s) || !sub.test(t))
                throw PreconditionError("terminal outside the working set");
            reserved.set(s);
            reserved.set(t);
        }
    }

    void place(int v) {
        used.set(v);
        reserved.reset(v);
        if (cut_set.test(v)) --cut_remaining;
    }
    void unplace(int v, bool was_reserved) {
        used.reset(v);
        if (was_reserved) reserved.set(v);
        if (cut_set.test(v)) ++cut_remaining;
    }

    void run() {
        start_pair(0);
    }

    void start_pair(std::size_t i) {
        if (!keep_going) return;
        if (i == pairs.size()) {
            if (coverage == CutCoverage::exactly_once && cut_remaining != 0) return;
            partition.scenarios.clear();
            for (std::size_t j = 0; j < pairs.size(); ++j)
                partition.scenarios.push_back({pairs[j], seqs[j]});
            keep_going = visit(partition);
            return;
        }
        int s = pairs[i].first;
        seqs[i].assign(1, s);
        place(s);
        int run_len = partition.component_of[s] >= 0 ? 1 : 0;
        extend(i, run_len);
        unplace(s, true);
        seqs[i].clear();
    }

    void extend(std::size_t i, int run_len) {
        if (!keep_going) return;
        int u = seqs[i].back();
        int t = pairs[i].second;
        int cu = partition.component_of[u];

        // Legal next elements: neighbors for crossings, same-component
        // vertices (when the current run allows one more) for pair fills.
        Bitset cand(g.vertex_count());
        if (cu == -1) {
            cand = g.row(u) & sub;
        } else {
            cand = g.row(u) & cut_set;
            if (run_len == 1) cand |= comp_sets[cu];
        }
        cand.subtract(used);

        for (int v = cand.next(0); v >= 0; v = cand.next(v + 1)) {
            bool is_target = (v == t);
            if (!is_target && reserved.test(v)) continue;
            int cv = partition.component_of[v];
            // A same-component step is only legal as a run of two.
            if (cu >= 0 && cv == cu && run_len != 1) continue;
            seqs[i].push_back(v);
            place(v);
            if (is_target) {
                start_pair(i + 1);
            } else {
                extend(i, cv >= 0 ? (cu == cv ? 2 : 1) : 0);
            }
            unplace(v, is_target);  // only targets were reserved before placing
            seqs[i].pop_back();
            if (!keep_going) return;
        }
    }
};

}  // namespace

void enumerate_plausible_within(const Graph& g, const Bitset& sub, const VertexSet& cut,
                                const std::vector<std::pair<int, int>>& pairs,
                                CutCoverage coverage,
                                const std::function<bool(const ScenarioCollection&)>& visit) {
    Enumerator e(g, sub, cut, pairs, coverage, visit);
    e.run();
}

void enumerate_plausible(const Graph& g, const VertexSet& cut,
                         const std::vector<std::pair<int, int>>& pairs, CutCoverage coverage,
                         const std::function<bool(const ScenarioCollection&)>& visit) {
    enumerate_plausible_within(g, g.full_vertex_set(), cut, pairs, coverage, visit);
}

ReducedInstance reduce_component(const VertexSet& q, const ScenarioCollection& c) {
    Bitset in_q((int)c.component_of.size());
    for (int v : q) in_q.set(v);
    Bitset survivors = in_q;
    std::vector<std::pair<int, int>> derived;
    for (const auto& s : c.scenarios) {
        const auto& seq = s.sequence;
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (!in_q.test(seq[i])) continue;
            bool neighbor_in_q = (i > 0 && in_q.test(seq[i - 1])) ||
                                 (i + 1 < seq.size() && in_q.test(seq[i + 1]));
            if (!neighbor_in_q) survivors.reset(seq[i]);
        }
        for (std::size_t i = 0; i + 1 < seq.size(); ++i)
            if (in_q.test(seq[i]) && in_q.test(seq[i + 1]) && seq[i] != seq[i + 1])
                derived.push_back({seq[i], seq[i + 1]});
    }
    return {survivors.to_vector(), derived};
}

}  // namespace hamlink
