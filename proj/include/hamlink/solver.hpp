#pragma once

#include <cstdint>

#include "hamlink/linkage.hpp"
#include "hamlink/oracle.hpp"
#include "hamlink/scenario.hpp"

namespace hamlink {

// Configuration shared by the recursive deciders.
//
// k is the independence bound the caller promises (alpha(G) < k); k == 0
// asks the solver to compute alpha exactly and set k = alpha + 1 itself.
// When verify_promise is set and the graph is small enough, the promise is
// checked up front and a violation raises PromiseError instead of risking a
// silent wrong answer.
struct SolverConfig {
    int k = 0;
    bool verify_promise = true;
    int max_alpha_n = 30;
    OracleLimits oracle;
    int threads = 1;  // evaluation is currently sequential; recorded for reports
};

// Counters for reports; plain integers, accumulated single-threaded.
struct SolverStats {
    std::uint64_t recursion_nodes = 0;
    std::uint64_t collections_tried = 0;
    int max_cut_size = 0;
    int max_depth = 0;
};

// Connectivity threshold above which a graph with independence number below
// k is Hamiltonian-ell-linked: max(k*ell, 10*ell).
std::uint64_t g_threshold(int k, int ell);

// Exponent bookkeeping f(2,ell) = 2, f(k,ell) = 2 g(k,ell) + f(k-1, g(k,ell)+ell).
std::uint64_t f_bound(int k, int ell);

// Decision: does the graph contain a Hamiltonian linkage for the pairs?
bool ham_linkage(const LinkageInstance& inst, const SolverConfig& cfg,
                 SolverStats* stats = nullptr);

// Every selection of 2*ell distinct terminals admits a Hamiltonian linkage.
bool ham_linkedness(const Graph& g, int ell, const SolverConfig& cfg,
                    SolverStats* stats = nullptr);

// Some cover by exactly ell vertex-disjoint paths exists (single-vertex
// paths permitted).
bool path_cover_exists(const Graph& g, int ell, const SolverConfig& cfg,
                       SolverStats* stats = nullptr);

// Exact path cover number; sums over components when disconnected.
int path_cover_number(const Graph& g, const SolverConfig& cfg, SolverStats* stats = nullptr);

bool ham_path(const Graph& g, const SolverConfig& cfg, SolverStats* stats = nullptr);
bool ham_cycle(const Graph& g, const SolverConfig& cfg, SolverStats* stats = nullptr);
bool ham_connected(const Graph& g, const SolverConfig& cfg, SolverStats* stats = nullptr);

// Minimum number of vertices left uncovered by any linkage of the pairs;
// infinite when no linkage exists.
Defect min_defect(const LinkageInstance& inst, const SolverConfig& cfg,
                  SolverStats* stats = nullptr);

// Resolves cfg.k: verifies the promise (or computes alpha when k == 0).
// Exposed for the CLI, which reports the outcome.
enum class PromiseOutcome { verified, trusted, computed };
PromiseOutcome resolve_promise(const Graph& g, SolverConfig& cfg);

}  // namespace hamlink
