#include "hamlink/labelling.hpp"

#include "hamlink/construct.hpp"

namespace hamlink {

bool verify_labelling(const Graph& g, const Labelling& lab, bool injective) {
    int n = g.vertex_count();
    if ((int)lab.labels.size() != n) return false;
    for (int v = 0; v < n; ++v)
        if (lab.labels[v] < 0) return false;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            int gap = std::abs(lab.labels[u] - lab.labels[v]);
            if (g.has_edge(u, v)) {
                if (gap < 2) return false;
            } else if ((g.row(u) & g.row(v)).any()) {
                if (gap < 1) return false;  // distance exactly two
            }
            if (injective && gap == 0) return false;
        }
    }
    return true;
}

namespace {

// A cover of g by exactly r vertex-disjoint paths (single-vertex paths
// allowed), found by the same enumeration the decision uses, with witnesses
// assembled for the successful selection.
std::optional<std::vector<std::vector<int>>> find_path_cover(const Graph& g, int r,
                                                             const SolverConfig& cfg) {
    int n = g.vertex_count();
    if (r == 0) return n == 0 ? std::make_optional(std::vector<std::vector<int>>{}) : std::nullopt;
    if (r > n) return std::nullopt;

    std::optional<std::vector<std::vector<int>>> result;
    std::vector<int> singles;

    auto try_selection = [&](const VertexSet& rest_verts, int pairs_needed) {
        if (result) return;
        if (pairs_needed == 0) {
            if (!rest_verts.empty()) return;
            std::vector<std::vector<int>> cover;
            for (int v : singles) cover.push_back({v});
            result = cover;
            return;
        }
        if ((int)rest_verts.size() < 2 * pairs_needed) return;
        auto ind = induced_subgraph(g, rest_verts);
        SolverConfig inner = cfg;
        inner.verify_promise = false;
        std::vector<int> terminals;
        std::vector<std::pair<int, int>> pairing;
        auto pairings = [&](auto&& self, std::vector<int> remaining) -> void {
            if (result) return;
            if (remaining.empty()) {
                LinkageInstance inst{ind.graph, pairing};
                if (auto witness = construct_ham_linkage(inst, inner)) {
                    std::vector<std::vector<int>> cover;
                    for (int v : singles) cover.push_back({v});
                    for (auto path : witness->paths) {
                        for (int& v : path) v = ind.to_parent[v];
                        cover.push_back(std::move(path));
                    }
                    result = cover;
                }
                return;
            }
            int a = remaining.front();
            for (std::size_t j = 1; j < remaining.size() && !result; ++j) {
                std::vector<int> next;
                for (std::size_t t = 1; t < remaining.size(); ++t)
                    if (t != j) next.push_back(remaining[t]);
                pairing.push_back({a, remaining[j]});
                self(self, std::move(next));
                pairing.pop_back();
            }
        };
        auto choose = [&](auto&& self, int from, int need) -> void {
            if (result) return;
            if (need == 0) {
                pairings(pairings, terminals);
                return;
            }
            for (int i = from; i + need <= (int)ind.graph.vertex_count() && !result; ++i) {
                terminals.push_back(i);
                self(self, i + 1, need - 1);
                terminals.pop_back();
            }
        };
        choose(choose, 0, 2 * pairs_needed);
    };

    auto choose_singles = [&](auto&& self, int from, int count) -> void {
        if (result) return;
        if (count == 0) {
            VertexSet rest;
            Bitset dropped(n);
            for (int v : singles) dropped.set(v);
            for (int v = 0; v < n; ++v)
                if (!dropped.test(v)) rest.push_back(v);
            try_selection(rest, r - (int)singles.size());
            return;
        }
        for (int v = from; v + count <= n && !result; ++v) {
            singles.push_back(v);
            self(self, v + 1, count - 1);
            singles.pop_back();
        }
    };
    for (int j = 0; j <= r && !result; ++j) choose_singles(choose_singles, 0, j);
    return result;
}

Labelling labelling_from_cover(int n, const std::vector<std::vector<int>>& cover) {
    Labelling lab;
    lab.labels.assign(n, -1);
    int next = 0;
    for (std::size_t i = 0; i < cover.size(); ++i) {
        if (i > 0) ++next;  // skip one value between paths
        for (int v : cover[i]) lab.labels[v] = next++;
    }
    return lab;
}

LambdaResult lambda_common(const Graph& g, const SolverConfig& cfg, bool injective) {
    int n = g.vertex_count();
    if (n == 0) return {true, 0, false, {}};
    Graph co = complement(g);
    SolverConfig cc = cfg;
    cc.k = 0;  // bound refers to the complement; recompute
    resolve_promise(co, cc);
    int r = path_cover_number(co, cc);

    LambdaResult out;
    if (r == 1 && !injective) {
        out.exact = false;
        out.value = n - 1;
        return out;
    }
    out.exact = true;
    out.value = n + r - 2;
    auto cover = find_path_cover(co, r, cc);
    if (!cover) throw InvariantViolation("lambda: no cover of the computed size exists");
    out.witness = labelling_from_cover(n, *cover);
    out.has_witness = true;
    if (!verify_labelling(g, out.witness, injective))
        throw InvariantViolation("lambda: constructed labelling failed verification");
    return out;
}

}  // namespace

LambdaResult lambda_prime_via_pc(const Graph& g, const SolverConfig& cfg) {
    return lambda_common(g, cfg, true);
}

LambdaResult lambda_via_pc(const Graph& g, const SolverConfig& cfg) {
    return lambda_common(g, cfg, false);
}

}  // namespace hamlink
