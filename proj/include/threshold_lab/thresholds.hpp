#pragma once

#include <optional>
#include <string>
#include <vector>

#include "threshold_lab/census.hpp"
#include "threshold_lab/graph.hpp"
#include "threshold_lab/numbers.hpp"

namespace tlab {

// E_p X_J = (n)_{v_J} p^{e_J} / |Aut(J)| for an n-vertex random host.
struct ExpectedCount {
    BigInt falling;  // (n)_v
    unsigned e = 0;
    BigInt aut;
    Prob p;
    long long n = 0;
    int v = 0;

    // E vs t, exact whenever p is exact.
    CmpResult cmp(const Rational& t, double tol = kLogTol) const;
    double log2() const;
    bool has_exact_rational() const { return p.is_exact() && p.root() == 1; }
    Rational exact_rational() const;
};

ExpectedCount expected_count(const Graph& j, long long n, const Prob& p);

struct ThresholdResult {
    Prob p;
    CanonicalCode binding_code;
    Graph binding_rep;
    Rational binding_base;  // p = binding_base^{1/binding_e}
    unsigned binding_e = 0;
};

// min{p : E_p X_I >= theta for every subgraph I of h with at least one edge}.
ThresholdResult p_expectation(const Graph& h, long long n, const Rational& theta = Rational(1, 2),
                              int max_census_edges = 20);
// Same with the constraint E_p X_I >= theta * N(h, I).
ThresholdResult p_expectation_star(const Graph& h, long long n,
                                   const Rational& theta = Rational(1, 2),
                                   int max_census_edges = 20);

struct SparseWitness {
    CanonicalCode code;
    Graph rep;
    std::optional<Rational> expectation;  // exact when q is rational
    double expectation_log2 = 0;
};

struct SparseCheck {
    bool sparse = false;
    bool near_tie = false;
    std::optional<SparseWitness> witness;
};

// E_q X_I >= theta for every subgraph I with an edge (theta defaults to 1).
SparseCheck is_q_sparse(const Graph& h, long long n, const Prob& q,
                        const Rational& theta = Rational(1), int max_census_edges = 20);
// Same test against an already computed census of h (avoids re-enumeration).
SparseCheck is_q_sparse(const Census& census, long long n, const Prob& q,
                        const Rational& theta = Rational(1));

struct RatioRow {
    Graph g;
    CanonicalCode code;
    std::string graph6;
    std::optional<ThresholdResult> pe;
    std::optional<ThresholdResult> pe_star;
    double ratio_log2 = 0;  // log2(p_E* / p_E)
    std::optional<std::string> error;
};

std::vector<RatioRow> ratio_scan(const std::vector<Graph>& family, long long n,
                                 const Rational& theta = Rational(1, 2),
                                 int max_census_edges = 20);

}  // namespace tlab
