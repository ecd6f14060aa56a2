#pragma once

#include <string>

#include "threshold_lab/leading.hpp"
#include "threshold_lab/mu.hpp"

namespace tlab {

struct ClauseReport {
    bool applicable = false;
    bool pass = true;
    std::string detail;
};

// Structural consequences of [B,A] being p-leading (with B the attachment
// roots, A the free vertices):
//   (a) mu_p(B,A) <= n, strictly when |A| >= 2;
//   (b) for p >= 1/n, every a in A has degree >= 2 (vacuous when |A| = 1);
//   (c) for p >= 1/n, |A| >= 2 and mu_p >= 1:
//       e(B,A) >= max(|A|, |B|+1), and e(B,A) > |A| unless B = ∅ and the
//       graph on A is a cycle.
struct SmallClaimsReport {
    MuValue mu_value;
    int a_size = 0;
    int b_size = 0;  // roots with at least one rooted edge
    bool near_tie = false;
    ClauseReport a, b, c;
    bool all_pass = true;
};

SmallClaimsReport check_small_claims(const RootedGraph& r, long long n, const Prob& p);

}  // namespace tlab
