#pragma once

#include <optional>
#include <vector>

#include "threshold_lab/graph.hpp"
#include "threshold_lab/mu.hpp"
#include "threshold_lab/thresholds.hpp"

namespace tlab {

struct LeadingWitness {
    std::vector<int> y_extra;  // Y = W ∪ y_extra
    MuValue mu_y;
};

struct LeadingCheck {
    bool leading = false;
    bool near_tie = false;
    std::optional<LeadingWitness> witness;  // some Y with mu_p(Y,Z) >= 1
};

// [W,Z] is p-leading when mu_p(Y,Z) < 1 for every Y strictly between W and Z.
// Requires W ⊊ Z.
LeadingCheck is_p_leading(const RootedGraph& r, long long n, const Prob& p, int max_free = 20);

struct DecompositionStep {
    std::vector<int> lower;  // W_i, original vertex labels
    std::vector<int> upper;  // W_{i+1}
    MuValue step_mu;         // mu_p(W_i, W_{i+1}) within J[W_{i+1}]
    bool near_tie = false;
};

struct LeadingDecomposition {
    std::vector<std::vector<int>> chain;  // ∅ = W_0 ⊊ W_1 ⊊ ... ⊊ W_k = V(J)
    std::vector<DecompositionStep> steps;
};

// Greedy chain: from the top, repeatedly take the maximum-cardinality
// (lexicographically least on ties) Y with mu_p(Y, current) >= 1.  Each step
// is then p-leading with mu_p >= 1.  Requires J q-sparse and p >= q.
LeadingDecomposition leading_decomposition(const Graph& j, long long n, const Prob& q,
                                           const Prob& p, int max_vertices = 12,
                                           int census_cap = 20);

// Re-check an existing decomposition (used by tests and the verifier path).
bool validate_decomposition(const Graph& j, long long n, const Prob& p,
                            const LeadingDecomposition& dec);

}  // namespace tlab
