#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "threshold_lab/graph.hpp"
#include "threshold_lab/numbers.hpp"
#include "threshold_lab/wz_tree.hpp"

namespace tlab {

// One checked inequality instance.
struct CheckRow {
    std::string label;
    bool applicable = true;  // the row's own hypotheses held
    bool pass = true;        // judged only when applicable
    bool near_tie = false;   // decided inside the bracketing tolerance
    std::string detail;
};

struct VerifyReport {
    std::string suite;
    bool hypotheses_met = true;  // instance-level preconditions
    std::vector<std::string> hypothesis_notes;
    std::vector<CheckRow> rows;
    std::vector<std::pair<std::string, double>> metrics;

    int checked = 0;
    int passed = 0;
    int failed = 0;
    int advisories = 0;  // inapplicable rows: reported, not judged
    bool all_pass = true;

    void add(CheckRow row);
    void note(bool ok, const std::string& what);
    void absorb(const VerifyReport& inner, const std::string& prefix);
};

// Edge-disjoint copies of [B,A] on x in a q-sparse host are at most
// max{e mu_{2q}(B,A), log n}  (e the natural base).
VerifyReport verify_lemma_f_fixed(const Graph& h, const RootedGraph& r, const std::vector<int>& x,
                                  long long n, const Prob& q,
                                  std::size_t budget = std::size_t{1} << 22);

// No maximal union of edge-sharing copies of [B,A] on x holds more than
// (e log n)^{e(B,A)-1} copies.  If q_prime is given, the surrounding
// hypotheses ([B,A] q'-leading, mu_{q'} >= 1, q' >= 1/n) are checked too.
VerifyReport verify_lemma_f_gen(const Graph& h, const RootedGraph& r, const std::vector<int>& x,
                                long long n, const std::optional<Prob>& q_prime = std::nullopt);

// For r-leading [W,Z] with (r/2)-sparse ambient graph, every [W,Z]-tree T
// satisfies mu~_r(T) <= mu_r(W,Z) * min{v(W,Z), 16 log n}^{e_T}.  Also probes
// the conjectured mu_r(T) <= mu_r(W,Z) * K^{e_T} and reports the smallest K
// that would work over the generated trees.
VerifyReport verify_lemma_tree_hard(const RootedGraph& r, const Graph& j_ambient, long long n,
                                    const Prob& rr, const WZTreeGen& trees);

// Same hypotheses force the largest sunflower below log n; also reproduces
// the certificate mu_{r/2}(J[Q ∪ S]) <= n^{|Q|} mu_{r/2}(Q,P)^k / k!.
VerifyReport verify_no_sunflower(const RootedGraph& r, const Graph& j_ambient, long long n,
                                 const Prob& rr);

// aut(W,Z) <= (16k)^{e(W,Z)} under k >= 4 log n, no k-sunflower and no
// isolated nonroot; aut(W,Z) <= v(W,Z)^{e(W,Z)} under the last condition
// alone.  Logs the smallest c with aut <= (c*k)^e at the given k.
VerifyReport verify_aut_bounds(const RootedGraph& r, int k, long long n);

// Vertex-disjoint copies of a tree t in a q-sparse host: nu <= e * E_q X_t.
VerifyReport verify_claim_nu(const Graph& h, const Graph& t, long long n, const Prob& q);

// For q < 1/n every cycle C_t has E_q X_C < (nq)^t/(2t) < 1, so q-sparse
// hosts are forests; spot-checks random hosts for the contrapositive.
VerifyReport verify_cycle_exclusion(long long n, const Prob& q, int t_cap = 50,
                                    int host_trials = 20, std::uint64_t seed = 20260823);

// End-to-end product bound for a connected f inside a q-sparse h on [n]:
// builds the q'-leading chain (q' = C q log n), checks every extension-count
// inequality tau~ <= mu~_{p'} over all anchor tuples, the product bound on
// labeled copies, and the final N(h,f) <= E_p X_f at p = e^2 p',
// p' = e q' log n.  Requires n a power of two and h on exactly n vertices.
VerifyReport verify_chain_bound(const Graph& h, const Graph& f, long long n, const Prob& q,
                                long big_c = 320);

// With p = beta/n, q = alpha*beta/n < 1/(3n) and h q-sparse:
// N(h,F) <= E_p X_F for every census class F of h.
VerifyReport verify_small_q_theorem(const Graph& h, long long n, const Rational& beta,
                                    const Rational& alpha);

// ---- suites ------------------------------------------------------------

VerifyReport suite_small_claims(int max_z = 6, std::vector<long long> ns = {16, 64, 1024});
VerifyReport suite_f_fixed(int instances = 100, std::uint64_t seed = 20260823);
VerifyReport suite_f_gen(int instances = 100, std::uint64_t seed = 20260823);
VerifyReport suite_tree_hard(int max_z = 5, int max_copies = 3, long long n = 1024);
VerifyReport suite_no_sunflower(int max_z = 5, long long n = 1024);
VerifyReport suite_aut_bounds(int max_z = 6, long long n = 16);
VerifyReport suite_nu(int instances = 100, std::uint64_t seed = 20260823);
VerifyReport suite_cycles(long long n = 100, const Rational& q = Rational(9, 1000),
                          int t_cap = 50);
VerifyReport suite_chain(int hosts = 50, long long n = 1024, std::uint64_t seed = 20260823);
VerifyReport suite_small_q(int hosts = 100);
VerifyReport suite_forest_count(int max_t = 7);
VerifyReport suite_connected_reduction(int hosts = 12, std::uint64_t seed = 20260823);

VerifyReport run_suite(const std::string& name);

}  // namespace tlab
