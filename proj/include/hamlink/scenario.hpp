#pragma once

#include <functional>

#include "hamlink/graph.hpp"

namespace hamlink {

// The reduced trace of one path through a vertex cut: cut vertices in visit
// order, their immediate path neighbors, and the terminal pair at the ends.
struct Scenario {
    std::pair<int, int> terminals;
    std::vector<int> sequence;  // starts at terminals.first, ends at terminals.second
};

// One scenario per terminal pair, together with the cut and the component
// partition they refer to. component_of[v] is -1 for cut vertices, -2 for
// vertices outside the working set, and the component index otherwise.
struct ScenarioCollection {
    std::vector<Scenario> scenarios;
    VertexSet cut;
    std::vector<int> component_of;
    int component_count = 0;
};

// Whether every cut vertex must be used exactly once (the decision
// algorithm) or at most once (the minimum-defect relaxation).
enum class CutCoverage { exactly_once, at_most_once };

// Structural scenario predicate: the sequence runs from s to t, no two
// consecutive elements lie in different components, and no three consecutive
// elements lie in the same component.
bool is_scenario_sequence(const ScenarioCollection& partition, const Scenario& s);

// The plausibility clauses: cut vertices used exactly (or at most) once,
// non-cut vertices at most once, and consecutive elements that do not share
// a component are adjacent.
bool is_plausible(const ScenarioCollection& c, const Graph& g,
                  CutCoverage coverage = CutCoverage::exactly_once);

// Builds the cut/component bookkeeping for g minus the cut (no scenarios).
ScenarioCollection make_partition(const Graph& g, const VertexSet& cut);

// Enumerates every plausible scenario collection exactly once, depth-first
// in lexicographic sequence order, yielding lazily. The visitor returns
// false to stop the enumeration. The stream is empty when no plausible
// collection exists.
void enumerate_plausible(const Graph& g, const VertexSet& cut,
                         const std::vector<std::pair<int, int>>& pairs, CutCoverage coverage,
                         const std::function<bool(const ScenarioCollection&)>& visit);

// Subset-restricted variant used by the solver: only vertices of `sub`
// exist; cut must be a subset of sub.
void enumerate_plausible_within(const Graph& g, const Bitset& sub, const VertexSet& cut,
                                const std::vector<std::pair<int, int>>& pairs,
                                CutCoverage coverage,
                                const std::function<bool(const ScenarioCollection&)>& visit);

// Derived subproblem for one component: the surviving vertices and the pairs
// that must be linked inside it.
struct ReducedInstance {
    VertexSet vertices;
    std::vector<std::pair<int, int>> pairs;
};

// The Reduce subroutine. q must be one component of the collection's
// partition. Scenario vertices of q with no same-component scenario neighbor
// are deleted; ordered consecutive same-component vertex pairs become the
// derived terminal pairs.
ReducedInstance reduce_component(const VertexSet& q, const ScenarioCollection& c);

}  // namespace hamlink
