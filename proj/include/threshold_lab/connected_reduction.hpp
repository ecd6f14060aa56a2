#pragma once

#include <string>
#include <vector>

#include "threshold_lab/thresholds.hpp"

namespace tlab {

// Per-class record for the connected-to-general reduction at rate p = e^2 p':
// if every connected subgraph class F satisfies N(h,F) <= E_{p'} X_F, then
// every subgraph class satisfies N(h,F) <= E_p X_F.
struct ConnReductionEntry {
    CanonicalCode code;
    int v = 0;
    int e = 0;
    bool connected = false;
    BigInt copies;
    bool hyp_ok = true;         // connected classes only
    bool concl_ok = true;       // at p = e^2 p'
    double concl_margin_log2 = 0;  // log2(E_p) - log2(N)
};

struct ConnReductionReport {
    bool hypothesis_met = false;
    bool conclusion_ok = false;
    bool advisory = false;  // conclusion not claimed because the hypothesis failed
    bool rate_above_one = false;
    double p_log2 = 0;  // log2(e^2 p')
    std::vector<ConnReductionEntry> entries;
    // Isolated-vertex classes are covered symbolically; these flags record the
    // algebraic identities re-verified on this host.
    bool isolate_identity_ok = false;
    std::string isolate_note;
};

ConnReductionReport verify_connected_reduction(const Graph& h, long long n, const Prob& p_prime,
                                               int census_cap = 20);

}  // namespace tlab
