#pragma once

#include "hamlink/graph.hpp"

namespace hamlink {

// Options shared by the structural deciders. Promise checks (connectivity
// and the independence bound) run by default. The three deciders whose
// condition lists are reconstructions rather than verbatim statements
// (ham_path_from_4k1, pc_uv_4k1, ham_path_5k1) additionally support a
// validation mode that cross-checks every answer against the exhaustive
// oracle for small graphs and throws InvariantViolation with the witness on
// divergence.
struct StructuralOptions {
    bool check_promise = true;
    bool validate = false;
    int validate_max_n = 14;
};

// Hamiltonian path with both endpoints prescribed, on connected graphs with
// no independent set of size 3: (a) neither endpoint is an articulation
// point, (b) every articulation point separates them, (c) the pair is not a
// vertex cut of size two.
bool ham_path_between_3k1(const Graph& g, int u, int v, const StructuralOptions& opt = {});

// Hamiltonian path with one prescribed endpoint: exists iff u is not an
// articulation point.
bool ham_path_from_3k1(const Graph& g, int u, const StructuralOptions& opt = {});

// Two-path cover with prescribed starting vertices always exists in a
// connected 3K1-free graph; the operation validates its preconditions and
// reports the guaranteed answer.
bool pc2_from_pair_3k1(const Graph& g, int u, int v, const StructuralOptions& opt = {});

// Hamiltonian path existence for connected graphs with no independent set
// of size 4, plus the guarantee that a negative answer implies a two-path
// cover.
struct HamPath4k1Result {
    bool has_ham_path;
    bool pc2_guarantee;  // set when has_ham_path is false
};
HamPath4k1Result ham_path_4k1(const Graph& g, const StructuralOptions& opt = {});

// Hamiltonian path from a prescribed start in a connected 4K1-free graph.
// Condition list reconstructed from the case analysis; ships behind the
// validation option above.
bool ham_path_from_4k1(const Graph& g, int u, const StructuralOptions& opt = {});

// Two-path cover of a 4K1-free graph (connected or not) with prescribed
// starting vertices. Reconstructed condition list.
bool pc_uv_4k1(const Graph& g, int u, int v, const StructuralOptions& opt = {});

// Hamiltonian path existence for connected graphs with no independent set
// of size 5. Reconstructed condition list, delegating to the 3K1/4K1
// deciders on components.
bool ham_path_5k1(const Graph& g, const StructuralOptions& opt = {});

}  // namespace hamlink
