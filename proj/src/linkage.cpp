#include "hamlink/linkage.hpp"

namespace hamlink {

void LinkageInstance::validate() const {
    int n = graph.vertex_count();
    Bitset seen(n);
    for (auto [s, t] : pairs) {
        for (int v : {s, t}) {
            if (v < 0 || v >= n)
                throw PreconditionError("terminal out of range: " + std::to_string(v));
            if (seen.test(v))
                throw PreconditionError("terminals are not pairwise distinct: " + std::to_string(v));
            seen.set(v);
        }
    }
}

bool linkage_is_valid(const Graph& g, const std::vector<std::pair<int, int>>& pairs,
                      const Linkage& l, bool require_hamiltonian) {
    if (l.paths.size() != pairs.size()) return false;
    Bitset used(g.vertex_count());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& path = l.paths[i];
        if (path.empty()) return false;
        auto [s, t] = pairs[i];
        if (path.front() != s || path.back() != t) return false;
        if (s == t && path.size() != 1) return false;
        for (std::size_t j = 0; j < path.size(); ++j) {
            int v = path[j];
            if (v < 0 || v >= g.vertex_count()) return false;
            if (used.test(v)) return false;
            used.set(v);
            if (j > 0 && !g.has_edge(path[j - 1], v)) return false;
        }
    }
    if (require_hamiltonian && used.count() != g.vertex_count()) return false;
    return true;
}

}  // namespace hamlink
