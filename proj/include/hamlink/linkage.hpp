#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hamlink/graph.hpp"

namespace hamlink {

// A graph together with ordered terminal pairs (s_i, t_i). All 2*ell
// terminals must be pairwise distinct.
struct LinkageInstance {
    Graph graph;
    std::vector<std::pair<int, int>> pairs;

    int ell() const { return (int)pairs.size(); }

    // Throws PreconditionError on duplicate or out-of-range terminals.
    void validate() const;
};

// ell vertex-disjoint paths; path i runs from s_i to t_i. Hamiltonian when
// the paths together cover every vertex.
struct Linkage {
    std::vector<std::vector<int>> paths;

    int covered_count() const {
        int c = 0;
        for (const auto& p : paths) c += (int)p.size();
        return c;
    }
};

// Structural check: disjointness, adjacency of consecutive vertices, correct
// endpoints, and (when required) full coverage. Returns false rather than
// throwing so tests can assert on it directly.
bool linkage_is_valid(const Graph& g, const std::vector<std::pair<int, int>>& pairs,
                      const Linkage& l, bool require_hamiltonian);

// Count of uncovered vertices of a best linkage, or infinite when no linkage
// exists at all. Infinity is a distinguished state, not a sentinel value.
class Defect {
public:
    static Defect infinite() { return Defect(true, 0); }
    static Defect finite(int value) { return Defect(false, value); }

    bool is_infinite() const { return infinite_; }
    int value() const {
        if (infinite_) throw PreconditionError("Defect: value() on infinite defect");
        return value_;
    }

    friend Defect operator+(const Defect& a, const Defect& b) {
        if (a.infinite_ || b.infinite_) return infinite();
        return finite(a.value_ + b.value_);
    }
    friend bool operator<(const Defect& a, const Defect& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator==(const Defect& a, const Defect& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }

private:
    Defect(bool inf, int value) : infinite_(inf), value_(value) {}
    bool infinite_;
    int value_;
};

}  // namespace hamlink
