#pragma once

#include "hamlink/solver.hpp"

namespace hamlink {

// Per-vertex non-negative labels.
struct Labelling {
    std::vector<int> labels;
};

// Checks the distance constraints: adjacent vertices differ by at least 2,
// vertices at distance exactly two differ by at least 1, and (when injective)
// all labels are distinct.
bool verify_labelling(const Graph& g, const Labelling& lab, bool injective);

// Result of a labelling-number computation. When exact is false the value is
// only an upper bound ("<= n-1"), which happens for the non-injective number
// of graphs whose complement is coverable by one path.
struct LambdaResult {
    bool exact = true;
    int value = 0;
    bool has_witness = false;
    Labelling witness;
};

// Injective labelling number via the path cover number of the complement:
// n-1 when the complement has a one-path cover, n+r-2 for r >= 2 paths.
// The witness labelling is built from the cover and re-verified.
LambdaResult lambda_prime_via_pc(const Graph& g, const SolverConfig& cfg);

// Non-injective labelling number: exact n+r-2 when the complement needs
// r >= 2 paths; otherwise the upper bound n-1 (resolve exactly with
// oracle_lambda for small graphs).
LambdaResult lambda_via_pc(const Graph& g, const SolverConfig& cfg);

}  // namespace hamlink
