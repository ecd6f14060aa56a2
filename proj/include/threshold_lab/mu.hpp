#pragma once

#include "threshold_lab/canonical.hpp"
#include "threshold_lab/graph.hpp"
#include "threshold_lab/numbers.hpp"

namespace tlab {

// mu_tilde_p(W,Z) = n^{v(W,Z)} p^{e(W,Z)},  mu_p = mu_tilde_p / aut(W,Z).
struct MuValue {
    int v = 0;
    unsigned e = 0;
    BigInt aut;
    long long n = 0;
    Prob p;

    CmpResult cmp_mu(const Rational& t, double tol = kLogTol) const;
    CmpResult cmp_mu_tilde(const Rational& t, double tol = kLogTol) const;
    double mu_log2() const;
    double mu_tilde_log2() const;
    bool has_exact() const { return p.is_exact() && p.root() == 1; }
    Rational mu_exact() const;
    Rational mu_tilde_exact() const;
};

MuValue mu(const RootedGraph& r, long long n, const Prob& p);

// [W ∪ extra, Z] derived from [W, Z]: the extra roots are appended in
// ascending vertex order and edges inside the enlarged root set are dropped.
RootedGraph grow_roots(const RootedGraph& r, const std::vector<int>& extra);

}  // namespace tlab
