#include "threshold_lab/small_claims.hpp"

#include <algorithm>

namespace tlab {

namespace {

bool is_cycle_graph(const Graph& g) {
    if (g.vertex_count() < 3 || !g.connected()) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

}  // namespace

SmallClaimsReport check_small_claims(const RootedGraph& r, long long n, const Prob& p) {
    LeadingCheck lead = is_p_leading(r, n, p);
    if (!lead.leading)
        throw PreconditionUnmet("rooted graph is not p-leading; offending intermediate set found");

    SmallClaimsReport rep;
    rep.mu_value = mu(r, n, p);
    rep.a_size = r.nonroot_count();
    for (int root : r.roots())
        if (r.base().degree(root) > 0) ++rep.b_size;
    if (lead.near_tie) rep.near_tie = true;

    // (a)
    rep.a.applicable = true;
    CmpResult vs_n = rep.mu_value.cmp_mu(Rational(static_cast<long>(n)));
    if (vs_n.near_tie) rep.near_tie = true;
    rep.a.pass = (rep.a_size >= 2) ? vs_n.lt() : vs_n.le();
    rep.a.detail = rep.a_size >= 2 ? "mu < n (strict)" : "mu <= n";

    CmpResult p_vs_recip = p.cmp_pow(1, make_rational(BigInt(1), BigInt(static_cast<long>(n))));
    bool p_large = p_vs_recip.ge();
    if (p_vs_recip.near_tie) rep.near_tie = true;

    // (b)
    rep.b.applicable = p_large;
    if (rep.b.applicable) {
        rep.b.pass = true;
        if (rep.a_size >= 2) {
            for (int a : r.nonroots())
                if (r.base().degree(a) < 2) {
                    rep.b.pass = false;
                    rep.b.detail = "free vertex " + std::to_string(a) + " has degree < 2";
                    break;
                }
        }
        if (rep.b.pass) rep.b.detail = rep.a_size >= 2 ? "all free degrees >= 2" : "vacuous, |A| = 1";
    } else {
        rep.b.detail = "needs p >= 1/n";
    }

    // (c)
    CmpResult mu_ge_one = rep.mu_value.cmp_mu(Rational(1));
    if (mu_ge_one.near_tie) rep.near_tie = true;
    rep.c.applicable = p_large && rep.a_size >= 2 && mu_ge_one.ge();
    if (rep.c.applicable) {
        int e = r.rooted_edge_count();
        int need = std::max(rep.a_size, rep.b_size + 1);
        bool base_ok = e >= need;
        Graph on_a = r.base().induced(r.nonroots());
        bool cycle_exempt = rep.b_size == 0 && is_cycle_graph(on_a);
        bool strict_ok = e > rep.a_size || cycle_exempt;
        rep.c.pass = base_ok && strict_ok;
        rep.c.detail = "e = " + std::to_string(e) + ", need >= " + std::to_string(need) +
                       (cycle_exempt ? ", B empty and A spans a cycle" : "");
    } else {
        rep.c.detail = "needs p >= 1/n, |A| >= 2 and mu >= 1";
    }

    rep.all_pass = (!rep.a.applicable || rep.a.pass) && (!rep.b.applicable || rep.b.pass) &&
                   (!rep.c.applicable || rep.c.pass);
    return rep;
}

}  // namespace tlab
