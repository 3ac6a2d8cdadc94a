#pragma once

#include "hamlink/solver.hpp"

namespace hamlink {

// Grows a valid linkage into a Hamiltonian one by repeated rerouting through
// fans of disjoint paths from an uncovered vertex into the covered set.
// Requires alpha(g) < k and vertex connectivity >= g_threshold(k, ell);
// each iteration strictly increases the covered-vertex count, so at most n
// iterations run. Throws InvariantViolation if no rewrite applies (the
// preconditions were false or there is a bug).
Linkage augment_linkage(const Graph& g, int k, int ell, Linkage current);

// Explicit witness construction mirroring the decision recursion: component
// witnesses are stitched along the first good scenario collection; highly
// connected graphs get an initial linkage by bounded exhaustive search which
// is then augmented. Returns a validated Hamiltonian linkage, or nullopt
// exactly when the decision is false.
std::optional<Linkage> construct_ham_linkage(const LinkageInstance& inst, const SolverConfig& cfg,
                                             SolverStats* stats = nullptr);

// Extra guard for the initial-linkage search in the highly connected base
// case; part of SolverConfig would be overkill for a single knob.
inline constexpr int kMaxInitialLinkageSearch = 64;

}  // namespace hamlink
