#pragma once

#include "hamlink/linkage.hpp"

namespace hamlink {

// Size guards for the exhaustive ground-truth solvers. Exceeding a guard is
// an explicit SizeGuardError, never a wrong answer.
struct OracleLimits {
    int max_backtrack_n = 14;  // general backtracking search
    int max_dp_n = 20;         // subset DP (single-pair queries, path covers)
    int max_lambda_n = 10;     // exhaustive labelling search
};

// Exhaustive witness search. Deterministic: the lowest-indexed unfinished
// path is extended from its current endpoint, neighbors tried in increasing
// id; single-pair Hamiltonian queries take a subset-DP fast path.
std::optional<Linkage> oracle_linkage(const LinkageInstance& inst, bool require_hamiltonian,
                                      const OracleLimits& limits = {});

// Minimum number of vertices left uncovered over all linkages.
Defect oracle_min_defect(const LinkageInstance& inst, const OracleLimits& limits = {});

// Exact path cover number by dynamic programming over vertex subsets.
int oracle_path_cover_number(const Graph& g, const OracleLimits& limits = {});

// True iff every choice of 2*ell distinct terminals admits a Hamiltonian
// linkage.
bool oracle_is_ham_linked(const Graph& g, int ell, const OracleLimits& limits = {});

// Exact labelling number: least max label over labellings where adjacent
// vertices differ by >= 2 and vertices at distance two differ by >= 1
// (all-distinct labels when injective).
int oracle_lambda(const Graph& g, bool injective, const OracleLimits& limits = {});

// Subset DP over g: table[mask] = bitmask of vertices v such that g[mask]
// has a Hamiltonian path ending (equivalently starting) at v. Shared by the
// oracle and the differential test sweeps. Requires n <= 20.
std::vector<std::uint32_t> ham_path_dp(const Graph& g);

// Fixed-start variant: table[mask] = bitmask of final vertices of paths that
// start at u and cover exactly mask.
std::vector<std::uint32_t> ham_path_dp_from(const Graph& g, int u);

// Convenience queries over the DP table.
bool dp_has_ham_path(const Graph& g);
bool dp_has_ham_path_from(const Graph& g, int u);
bool dp_has_ham_path_between(const Graph& g, int u, int v);
// Two-path cover with prescribed starting vertices u and v (single-vertex
// paths allowed).
bool dp_has_pc_pair(const Graph& g, int u, int v);

}  // namespace hamlink
