#include "threshold_lab/mu.hpp"

#include <algorithm>

namespace tlab {

CmpResult MuValue::cmp_mu(const Rational& t, double tol) const {
    // n^v p^e / aut >= t  <=>  p^e >= t * aut / n^v
    Rational rhs = t * make_rational(aut, int_pow(BigInt(static_cast<long>(n)), v));
    return p.cmp_pow(e, rhs, tol);
}

CmpResult MuValue::cmp_mu_tilde(const Rational& t, double tol) const {
    Rational rhs = t * make_rational(BigInt(1), int_pow(BigInt(static_cast<long>(n)), v));
    return p.cmp_pow(e, rhs, tol);
}

double MuValue::mu_log2() const { return mu_tilde_log2() - log2_value(aut); }

double MuValue::mu_tilde_log2() const {
    return static_cast<double>(v) * log2_value(BigInt(static_cast<long>(n))) +
           static_cast<double>(e) * p.log2();
}

Rational MuValue::mu_exact() const {
    if (!has_exact()) throw DomainError("mu is not an exact rational");
    return mu_tilde_exact() * make_rational(BigInt(1), aut);
}

Rational MuValue::mu_tilde_exact() const {
    if (!has_exact()) throw DomainError("mu is not an exact rational");
    return Rational(int_pow(BigInt(static_cast<long>(n)), v)) * rat_pow(p.base(), e);
}

MuValue mu(const RootedGraph& r, long long n, const Prob& p) {
    if (n < 1) throw DomainError("mu needs n >= 1");
    MuValue out;
    out.v = r.nonroot_count();
    out.e = static_cast<unsigned>(r.rooted_edge_count());
    out.aut = aut_count(r);
    out.n = n;
    out.p = p;
    return out;
}

RootedGraph grow_roots(const RootedGraph& r, const std::vector<int>& extra) {
    std::vector<int> roots = r.roots();
    std::vector<int> add = extra;
    std::sort(add.begin(), add.end());
    for (int v : add) {
        if (r.is_root(v)) throw DomainError("grow_roots: vertex is already a root");
        roots.push_back(v);
    }
    return RootedGraph::on(r.base(), std::move(roots));
}

}  // namespace tlab
