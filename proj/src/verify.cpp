#include "threshold_lab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "threshold_lab/canonical.hpp"
#include "threshold_lab/census.hpp"
#include "threshold_lab/components.hpp"
#include "threshold_lab/errors.hpp"
#include "threshold_lab/family.hpp"
#include "threshold_lab/leading.hpp"
#include "threshold_lab/mu.hpp"
#include "threshold_lab/packing.hpp"
#include "threshold_lab/sunflower.hpp"
#include "threshold_lab/thresholds.hpp"

namespace tlab {

void VerifyReport::add(CheckRow row) {
    if (row.applicable) {
        ++checked;
        if (row.pass)
            ++passed;
        else {
            ++failed;
            all_pass = false;
        }
    } else {
        ++advisories;
    }
    rows.push_back(std::move(row));
}

void VerifyReport::note(bool ok, const std::string& what) {
    hypothesis_notes.push_back(std::string(ok ? "ok: " : "unmet: ") + what);
    if (!ok) hypotheses_met = false;
}

void VerifyReport::absorb(const VerifyReport& inner, const std::string& prefix) {
    for (CheckRow row : inner.rows) {
        row.label = prefix + row.label;
        if (!inner.hypotheses_met) {
            // the lemma promises nothing here, so do not judge the row
            row.applicable = false;
            row.detail += " [hypotheses unmet]";
        }
        add(std::move(row));
    }
    for (const auto& m : inner.metrics) metrics.emplace_back(prefix + m.first, m.second);
}

namespace {

BigInt big(long long x) { return BigInt(static_cast<long>(x)); }
BigInt npow(long long n, unsigned e) { return int_pow(big(n), e); }

// brackets for the natural base e and e^3
const Rational kELo = make_rational(big(271828182), big(100000000));
const Rational kEHi = make_rational(big(271828183), big(100000000));
const Rational kE3Lo = make_rational(big(2008553692), big(100000000));
const Rational kE3Hi = make_rational(big(2008553693), big(100000000));

bool power_of_two(long long n) { return n >= 1 && (n & (n - 1)) == 0; }

int exact_log2(long long n) {
    int j = 0;
    while ((n >> j) > 1) ++j;
    return j;
}

// rational bracket around log2(n); exact for powers of two
std::pair<Rational, Rational> log2_bracket(long long n) {
    if (power_of_two(n)) {
        Rational l(exact_log2(n));
        return {l, l};
    }
    const double l = std::log2(static_cast<double>(n));
    const double scale = 1073741824.0;  // 2^30
    BigInt lo = big(static_cast<long long>(std::floor(l * scale)) - 2);
    BigInt hi = big(static_cast<long long>(std::ceil(l * scale)) + 2);
    return {make_rational(lo, big(1) << 30), make_rational(hi, big(1) << 30)};
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

// verdict for "LHS <= RHS(c)" where RHS grows with c in [c_lo, c_hi]
void judge_le(CheckRow& row, const CmpResult& with_lo, const CmpResult& with_hi) {
    if (with_lo.le()) {
        row.pass = true;
        row.near_tie = with_lo.near_tie;
    } else if (with_hi.gt()) {
        row.pass = false;
        row.near_tie = with_hi.near_tie;
    } else {
        row.pass = true;  // inside the bracket: benefit of the doubt, flagged
        row.near_tie = true;
    }
}

}  // namespace

VerifyReport verify_lemma_f_fixed(const Graph& h, const RootedGraph& r, const std::vector<int>& x,
                                  long long n, const Prob& q, std::size_t budget) {
    VerifyReport rep;
    rep.suite = "F-fixed";
    auto sc = is_q_sparse(h, n, q);
    rep.note(sc.sparse, "host is q-sparse");

    const int nu = rooted_packing_number(h, r, x, PackingMode::EdgeDisjoint, budget);
    MuValue m2 = mu(r, n, q.scaled(Rational(2)));

    CheckRow row;
    row.label = "edge-disjoint copies <= max{e*mu_2q, log n}";
    const bool log_side = int_pow(big(2), static_cast<unsigned>(nu)) <= big(n);
    if (nu == 0 || log_side) {
        row.pass = true;
    } else {
        CmpResult lo = m2.cmp_mu(Rational(nu) / kELo);  // mu_2q >= nu/e
        CmpResult hi = m2.cmp_mu(Rational(nu) / kEHi);
        judge_le(row, CmpResult{lo.ge() ? -1 : 1, lo.exact, lo.near_tie},
                 CmpResult{hi.ge() ? -1 : 1, hi.exact, hi.near_tie});
    }
    std::ostringstream os;
    os << "nu=" << nu << " log2(e*mu_2q)=" << fmt(kLog2E + m2.mu_log2())
       << " log2(n)=" << fmt(std::log2(static_cast<double>(n)));
    row.detail = os.str();
    rep.add(std::move(row));
    return rep;
}

VerifyReport verify_lemma_f_gen(const Graph& h, const RootedGraph& r, const std::vector<int>& x,
                                long long n, const std::optional<Prob>& q_prime) {
    VerifyReport rep;
    rep.suite = "F-gen";
    const int eba = r.rooted_edge_count();
    rep.note(eba != 0, "e(B,A) != 0");
    if (q_prime) {
        auto lead = is_p_leading(r, n, *q_prime);
        rep.note(lead.leading, "[B,A] is q'-leading");
        MuValue mq = mu(r, n, *q_prime);
        rep.note(mq.cmp_mu(Rational(1)).ge(), "mu_{q'}(B,A) >= 1");
        rep.note(q_prime->cmp(Prob::rational(make_rational(big(1), big(n)))).ge(), "q' >= 1/n");
    } else {
        rep.hypothesis_notes.push_back("note: q' not supplied; surrounding hypotheses unchecked");
    }

    auto split = extract_components(h, r, x);
    Rational bound_lo(0), bound_hi(0);
    if (eba >= 1) {
        auto [llo, lhi] = log2_bracket(n);
        bound_lo = rat_pow(kELo * llo, static_cast<unsigned>(eba - 1));
        bound_hi = rat_pow(kEHi * lhi, static_cast<unsigned>(eba - 1));
    }

    if (r.nonroot_count() == 1) {
        CheckRow row;
        row.label = "|A|=1: components are single copies";
        row.pass = true;
        for (const auto& comp : split.components)
            if (comp.copy_ids.size() != 1) row.pass = false;
        row.detail = std::to_string(split.components.size()) + " components";
        rep.add(std::move(row));
    }

    for (std::size_t i = 0; i < split.components.size(); ++i) {
        const auto count = static_cast<long>(split.components[i].copy_ids.size());
        CheckRow row;
        row.label = "component " + std::to_string(i) + ": copies <= (e log n)^(e(B,A)-1)";
        if (eba == 0) {
            row.applicable = false;
            row.detail = "raw copy count " + std::to_string(count);
        } else {
            if (Rational(count) <= bound_lo) {
                row.pass = true;
            } else if (Rational(count) > bound_hi) {
                row.pass = false;
            } else {
                row.pass = true;
                row.near_tie = true;
            }
            row.detail = "copies=" + std::to_string(count) +
                         " bound~2^" + fmt(log2_value(bound_lo));
        }
        rep.add(std::move(row));
    }
    if (split.components.empty()) {
        CheckRow row;
        row.label = "no copies on these anchors";
        row.detail = "vacuous";
        rep.add(std::move(row));
    }
    return rep;
}

VerifyReport verify_lemma_tree_hard(const RootedGraph& r, const Graph& j_ambient, long long n,
                                    const Prob& rr, const WZTreeGen& trees) {
    if (!(RootedGraph::on(j_ambient, r.roots()) == r))
        throw DomainError("ambient graph does not restrict to the rooted graph");
    VerifyReport rep;
    rep.suite = "tree-hard";
    auto lead = is_p_leading(r, n, rr);
    rep.note(lead.leading, "[W,Z] is r-leading");
    auto sp = is_q_sparse(j_ambient, n, rr.scaled(Rational(1, 2)));
    rep.note(sp.sparse, "ambient graph is (r/2)-sparse");

    const BigInt autwz = aut_count(r);
    const int v = r.nonroot_count();
    const unsigned e = static_cast<unsigned>(r.rooted_edge_count());

    // cap M = min{v(W,Z), 16 log n}
    Rational mlo, mhi;
    if (int_pow(big(2), static_cast<unsigned>(v)) <= npow(n, 16)) {
        mlo = mhi = Rational(v);
    } else {
        auto [llo, lhi] = log2_bracket(n);
        mlo = Rational(16) * llo;
        mhi = Rational(16) * lhi;
    }

    const double base_mu_log2 =
        v * std::log2(static_cast<double>(n)) + e * rr.log2() - log2_value(autwz);
    double min_k = 0.0;
    for (std::size_t i = 0; i < trees.trees.size(); ++i) {
        const WZTree& t = trees.trees[i];
        const int vt = t.union_graph.vertex_count() - r.root_count();
        const unsigned et = static_cast<unsigned>(t.e_t());

        CheckRow row;
        row.label = "tree " + std::to_string(i) + " (copies=" + std::to_string(t.copy_count()) +
                    ", e_T=" + std::to_string(et) + ")";
        const Rational a(npow(n, static_cast<unsigned>(vt)));
        const Rational b_lo = Rational(npow(n, static_cast<unsigned>(v))) * rat_pow(mlo, et) / autwz;
        CmpResult clo = cmp_scaled_pow(a, et, b_lo, e, rr);
        if (mlo == mhi) {
            row.pass = clo.le();
            row.near_tie = clo.near_tie;
        } else {
            const Rational b_hi =
                Rational(npow(n, static_cast<unsigned>(v))) * rat_pow(mhi, et) / autwz;
            judge_le(row, clo, cmp_scaled_pow(a, et, b_hi, e, rr));
        }
        const double lhs_log2 = vt * std::log2(static_cast<double>(n)) + et * rr.log2();
        row.detail = "log2(mu~_r T)=" + fmt(lhs_log2) +
                     " log2(rhs)~" + fmt(base_mu_log2 + log2_value(autwz) +
                                          et * log2_value(mlo));
        rep.add(std::move(row));

        const BigInt aut_t = aut_count(t.rooted());
        const double mu_t_log2 = lhs_log2 - log2_value(aut_t);
        min_k = std::max(min_k, std::exp2((mu_t_log2 - base_mu_log2) / et));
    }
    if (trees.truncated) rep.hypothesis_notes.push_back("note: tree stream truncated");
    rep.metrics.emplace_back("conjecture_min_K", min_k);
    return rep;
}

VerifyReport verify_no_sunflower(const RootedGraph& r, const Graph& j_ambient, long long n,
                                 const Prob& rr) {
    if (!(RootedGraph::on(j_ambient, r.roots()) == r))
        throw DomainError("ambient graph does not restrict to the rooted graph");
    VerifyReport rep;
    rep.suite = "no-sunflower";
    auto lead = is_p_leading(r, n, rr);
    rep.note(lead.leading, "[W,Z] is r-leading");
    const Prob rhalf = rr.scaled(Rational(1, 2));
    auto sp = is_q_sparse(j_ambient, n, rhalf);
    rep.note(sp.sparse, "ambient graph is (r/2)-sparse");

    Sunflower sf = max_sunflower(r);
    {
        CheckRow row;
        row.label = "max sunflower k < log2 n";
        row.applicable = sf.exact;
        row.pass = int_pow(big(2), static_cast<unsigned>(std::max(sf.k, 0))) < big(n);
        row.detail = "k=" + std::to_string(sf.k) + (sf.exact ? "" : " (lower bound only)");
        rep.add(std::move(row));
    }

    if (sf.k >= 1) {
        // counting certificate on the extracted sunflower
        const std::vector<int>& p0 = sf.petals[0];
        std::vector<int> s_union;
        for (const auto& p : sf.petals) s_union.insert(s_union.end(), p.begin(), p.end());
        std::sort(s_union.begin(), s_union.end());
        std::vector<int> qs = sf.core;
        std::vector<int> rverts;
        std::merge(qs.begin(), qs.end(), s_union.begin(), s_union.end(),
                   std::back_inserter(rverts));
        rverts.erase(std::unique(rverts.begin(), rverts.end()), rverts.end());
        Graph rgraph = j_ambient.induced(rverts);

        std::vector<int> qp_verts;
        std::merge(qs.begin(), qs.end(), p0.begin(), p0.end(), std::back_inserter(qp_verts));
        std::vector<int> qp_roots;
        for (std::size_t i = 0; i < qp_verts.size(); ++i)
            if (std::binary_search(qs.begin(), qs.end(), qp_verts[i]))
                qp_roots.push_back(static_cast<int>(i));
        RootedGraph rqp = RootedGraph::on(j_ambient.induced(qp_verts), qp_roots);
        MuValue mu_qp = mu(rqp, n, rhalf);

        CheckRow cert;
        cert.label = "mu_{r/2}(J[Q∪S]) <= n^|Q| mu_{r/2}(Q,P)^k / k!";
        const unsigned er = static_cast<unsigned>(rgraph.edge_count());
        const unsigned k = static_cast<unsigned>(sf.k);
        Rational lhs_a = Rational(npow(n, static_cast<unsigned>(rgraph.vertex_count()))) /
                         aut_count(rgraph);
        BigInt kfact;
        mpz_fac_ui(kfact.get_mpz_t(), k);
        Rational rhs_b = Rational(npow(n, static_cast<unsigned>(qs.size()))) *
                         rat_pow(Rational(npow(n, static_cast<unsigned>(p0.size()))) / mu_qp.aut,
                                 k) /
                         kfact;
        CmpResult c = cmp_scaled_pow(lhs_a, er, rhs_b, k * mu_qp.e, rhalf);
        cert.pass = c.le();
        cert.near_tie = c.near_tie;
        cert.detail = "k=" + std::to_string(sf.k) + " |Q|=" + std::to_string(qs.size()) +
                      " e(Q,P)=" + std::to_string(mu_qp.e);
        rep.add(std::move(cert));

        if (static_cast<int>(p0.size()) < r.nonroot_count()) {
            // mu_r(Q,P) = mu_r(Z\P, P), and < 1 under the leading hypothesis
            std::vector<int> zp_roots;
            for (int u = 0; u < r.vertex_count(); ++u)
                if (!std::binary_search(p0.begin(), p0.end(), u)) zp_roots.push_back(u);
            RootedGraph rzp = grow_roots(r, [&] {
                std::vector<int> extra;
                for (int u : zp_roots)
                    if (!r.is_root(u)) extra.push_back(u);
                return extra;
            }());
            MuValue mu_zp = mu(rzp, n, rr);
            MuValue mu_qp_r = mu(rqp, n, rr);

            CheckRow eq;
            eq.label = "mu_r(Q,P) = mu_r(Z\\P,P)";
            eq.pass = mu_zp.v == mu_qp_r.v && mu_zp.e == mu_qp_r.e && mu_zp.aut == mu_qp_r.aut;
            eq.detail = "v=" + std::to_string(mu_qp_r.v) + " e=" + std::to_string(mu_qp_r.e);
            rep.add(std::move(eq));

            CheckRow lt;
            lt.label = "mu_r(Q,P) < 1";
            lt.applicable = lead.leading;
            CmpResult c1 = mu_qp_r.cmp_mu(Rational(1));
            lt.pass = c1.lt();
            lt.near_tie = c1.near_tie;
            lt.detail = "log2=" + fmt(mu_qp_r.mu_log2());
            rep.add(std::move(lt));
        }
    }
    return rep;
}

VerifyReport verify_aut_bounds(const RootedGraph& r, int k, long long n) {
    VerifyReport rep;
    rep.suite = "aut-bounds";
    const BigInt aut = aut_count(r);
    const int v = r.nonroot_count();
    const unsigned e = static_cast<unsigned>(r.rooted_edge_count());

    bool no_iso = true;
    for (int u : r.nonroots())
        if (r.base().degree(u) == 0) no_iso = false;

    Sunflower sf = max_sunflower(r);
    const bool k_large = int_pow(big(2), static_cast<unsigned>(k)) >= npow(n, 4);
    const bool no_k_sunflower = sf.exact && sf.k < k;

    {
        CheckRow row;
        row.label = "aut(W,Z) <= (16k)^e";
        row.applicable = (v == 0) || (k_large && no_k_sunflower && no_iso);
        row.pass = aut <= int_pow(big(16) * big(k), e);
        row.detail = "aut=" + to_string(aut) + " k=" + std::to_string(k) +
                     " max_sunflower=" + std::to_string(sf.k) + (sf.exact ? "" : "~");
        rep.add(std::move(row));
    }
    {
        CheckRow row;
        row.label = "aut(W,Z) <= v(W,Z)^e";
        row.applicable = (v == 0) || no_iso;
        row.pass = aut <= int_pow(big(v), e);
        row.detail = "aut=" + to_string(aut) + " v=" + std::to_string(v) +
                     " e=" + std::to_string(e);
        rep.add(std::move(row));
    }
    if (e >= 1 && k >= 1)
        rep.metrics.emplace_back("needed_c_at_k",
                                 std::exp2(log2_value(aut) / static_cast<double>(e)) / k);
    return rep;
}

VerifyReport verify_claim_nu(const Graph& h, const Graph& t, long long n, const Prob& q) {
    VerifyReport rep;
    rep.suite = "nu";
    rep.note(t.vertex_count() >= 1 && t.connected() && t.acyclic(), "pattern is a tree");
    auto sc = is_q_sparse(h, n, q);
    rep.note(sc.sparse, "host is q-sparse");

    const int nu = packing_number(h, t, PackingMode::VertexDisjoint);
    ExpectedCount ex = expected_count(t, n, q);

    CheckRow row;
    row.label = "vertex-disjoint copies <= e*E_q";
    if (nu == 0) {
        row.pass = true;
    } else {
        CmpResult lo = ex.cmp(Rational(nu) / kELo);  // E >= nu/e
        CmpResult hi = ex.cmp(Rational(nu) / kEHi);
        judge_le(row, CmpResult{lo.ge() ? -1 : 1, lo.exact, lo.near_tie},
                 CmpResult{hi.ge() ? -1 : 1, hi.exact, hi.near_tie});
    }
    row.detail = "nu=" + std::to_string(nu) + " log2(e*E_q)=" + fmt(kLog2E + ex.log2());
    rep.add(std::move(row));
    return rep;
}

VerifyReport verify_cycle_exclusion(long long n, const Prob& q, int t_cap, int host_trials,
                                    std::uint64_t seed) {
    if (!q.cmp(Prob::rational(make_rational(big(1), big(n)))).lt())
        throw DomainError("cycle exclusion needs q < 1/n");
    VerifyReport rep;
    rep.suite = "cycles";

    for (int t = 3; t <= t_cap; ++t) {
        CheckRow row;
        row.label = "E_q X_{C_" + std::to_string(t) + "} < (nq)^t/(2t) < 1";
        if (t > n) {
            row.detail = "vacuous: t > n";
            rep.add(std::move(row));
            continue;
        }
        ExpectedCount ex = expected_count(graphs::cycle(t), n, q);
        const bool lt_one = ex.cmp(Rational(1)).lt();
        // E < (nq)^t/(2t) reduces to (n)_t < n^t for q > 0
        const bool mid = q.is_zero() || falling_factorial(n, static_cast<unsigned>(t)) <
                                            npow(n, static_cast<unsigned>(t));
        const bool mid_lt_one =
            q.cmp_pow(static_cast<unsigned>(t),
                      make_rational(big(2) * big(t), npow(n, static_cast<unsigned>(t))))
                .lt();
        row.pass = lt_one && mid && mid_lt_one;
        row.detail = "log2(E)=" + fmt(ex.log2());
        rep.add(std::move(row));
    }

    for (int i = 0; i < host_trials; ++i) {
        SplitMix64 rng(sample_stream_seed(seed, 11, static_cast<std::uint64_t>(i)));
        const int m = static_cast<int>(std::min<long long>(n, 16));
        Graph g = random_forest(m, m, 0.3, rng);
        bool cycle_added = false;
        if (i % 2 == 1) {
            for (const auto& comp : g.components()) {
                if (comp.size() < 3) continue;
                if (!g.has_edge(comp[0], comp[2])) {
                    g.add_edge(comp[0], comp[2]);
                    cycle_added = !g.acyclic();
                    break;
                }
            }
        }
        auto sc = is_q_sparse(g, n, q);
        CheckRow row;
        row.label = "host " + std::to_string(i) + (cycle_added ? " (cycle planted)" : " (forest)");
        row.pass = !(sc.sparse && !g.acyclic());
        row.detail = sc.sparse ? "q-sparse, acyclic" : "not q-sparse";
        rep.add(std::move(row));
    }
    return rep;
}

VerifyReport verify_chain_bound(const Graph& h, const Graph& f, long long n, const Prob& q,
                                long big_c) {
    if (h.vertex_count() != n) throw DomainError("chain host must live on exactly n vertices");
    if (!power_of_two(n)) throw DomainError("chain verifier needs n a power of two");
    VerifyReport rep;
    rep.suite = "chain";
    const int l = exact_log2(n);

    rep.note(f.vertex_count() >= 1 && f.connected(), "f is connected");
    rep.note(contains_copy(h, f), "f is a subgraph of h");
    auto sc = is_q_sparse(h, n, q);
    rep.note(sc.sparse, "h is q-sparse");

    const Prob qp = q.scaled(Rational(big_c * l));
    rep.note(qp.cmp(Prob::rational(make_rational(big(1), big(n)))).ge(), "q' >= 1/n");

    LeadingDecomposition dec;
    try {
        dec = leading_decomposition(f, n, qp, qp);
        rep.note(true, "q'-leading chain of length " + std::to_string(dec.steps.size()));
    } catch (const Error& ex) {
        rep.note(false, std::string("leading decomposition failed: ") + ex.what());
        return rep;
    }

    const Rational rl(l);
    const Prob p_lo = qp.scaled(kELo * rl), p_hi = qp.scaled(kEHi * rl);
    const Prob pf_lo = qp.scaled(kE3Lo * rl), pf_hi = qp.scaled(kE3Hi * rl);

    std::vector<int> support;
    for (int u = 0; u < h.vertex_count(); ++u)
        if (h.degree(u) > 0) support.push_back(u);

    BigInt product(1);
    for (std::size_t si = 0; si < dec.steps.size(); ++si) {
        const auto& step = dec.steps[si];
        std::vector<int> upper = step.upper, lower = step.lower;
        std::sort(upper.begin(), upper.end());
        std::sort(lower.begin(), lower.end());
        std::vector<int> roots;
        for (std::size_t i = 0; i < upper.size(); ++i)
            if (std::binary_search(lower.begin(), lower.end(), upper[i]))
                roots.push_back(static_cast<int>(i));
        RootedGraph ri = RootedGraph::on(f.induced(upper), roots);

        // split off nonroots isolated inside the step: they contribute a
        // falling-factorial factor over the ambient vertex set
        std::vector<int> core_verts;
        int y = 0;
        for (int u = 0; u < ri.vertex_count(); ++u) {
            if (!ri.is_root(u) && ri.base().degree(u) == 0)
                ++y;
            else
                core_verts.push_back(u);
        }
        std::vector<int> core_roots;
        for (std::size_t i = 0; i < core_verts.size(); ++i)
            if (ri.is_root(core_verts[i])) core_roots.push_back(static_cast<int>(i));
        RootedGraph rcore = RootedGraph::on(ri.base().induced(core_verts), core_roots);
        const int v_core = rcore.vertex_count();

        // anchor pool: the support plus |lower| interchangeable isolated hosts
        std::vector<int> pool = support;
        int extra = 0;
        for (int u = 0; u < h.vertex_count() && extra < static_cast<int>(lower.size()); ++u)
            if (h.degree(u) == 0) {
                pool.push_back(u);
                ++extra;
            }

        BigInt best_tau(0);
        std::vector<int> best_u;
        std::vector<int> tuple(lower.size(), -1);
        std::vector<char> in_use(pool.size(), 0);
        const BigInt iso_factor = falling_factorial(n - v_core, static_cast<unsigned>(y));
        auto scan = [&](auto&& self, std::size_t pos) -> void {
            if (pos == tuple.size()) {
                ExtensionCount ec = count_extensions(rcore, h, tuple);
                if (ec.labeled == 0) return;
                BigInt tau = ec.labeled * iso_factor;
                if (tau > best_tau) {
                    best_tau = tau;
                    best_u = tuple;
                }
                return;
            }
            for (std::size_t j = 0; j < pool.size(); ++j) {
                if (in_use[j]) continue;
                in_use[j] = 1;
                tuple[pos] = pool[j];
                self(self, pos + 1);
                in_use[j] = 0;
            }
        };
        if (tuple.empty()) {
            ExtensionCount ec = count_extensions(rcore, h, {});
            best_tau = ec.labeled * iso_factor;
        } else {
            scan(scan, 0);
        }

        const int v_step = ri.nonroot_count();
        const unsigned e_step = static_cast<unsigned>(ri.rooted_edge_count());
        CheckRow row;
        row.label = "step " + std::to_string(si + 1) + ": max tau~ <= mu~_{p'}";
        CmpResult clo = cmp_scaled_pow(Rational(best_tau), 0,
                                       Rational(npow(n, static_cast<unsigned>(v_step))), e_step,
                                       p_lo);
        CmpResult chi = cmp_scaled_pow(Rational(best_tau), 0,
                                       Rational(npow(n, static_cast<unsigned>(v_step))), e_step,
                                       p_hi);
        judge_le(row, clo, chi);
        row.detail = "max tau~=" + to_string(best_tau) + " v=" + std::to_string(v_step) +
                     " e=" + std::to_string(e_step);
        rep.add(std::move(row));

        product *= best_tau;
    }

    const BigInt ntilde = count_labeled_copies(h, f);
    {
        CheckRow row;
        row.label = "N~(h,f) <= product of step maxima";
        row.pass = ntilde <= product;
        row.detail = "N~=" + to_string(ntilde) + " product=" + to_string(product);
        rep.add(std::move(row));
    }
    {
        CheckRow row;
        row.label = "N(h,f) <= E_p X_f at p = e^2 p'";
        const unsigned ef = static_cast<unsigned>(f.edge_count());
        const Rational ff(falling_factorial(n, static_cast<unsigned>(f.vertex_count())));
        CmpResult clo = cmp_scaled_pow(Rational(ntilde), 0, ff, ef, pf_lo);
        CmpResult chi = cmp_scaled_pow(Rational(ntilde), 0, ff, ef, pf_hi);
        judge_le(row, clo, chi);
        row.detail = "N~=" + to_string(ntilde) + " (comparison done on labeled counts)";
        rep.add(std::move(row));
    }
    return rep;
}

VerifyReport verify_small_q_theorem(const Graph& h, long long n, const Rational& beta,
                                    const Rational& alpha) {
    VerifyReport rep;
    rep.suite = "small-q";
    const Rational ab = alpha * beta;
    rep.note(alpha > 0 && alpha < 1, "alpha in (0,1)");
    rep.note(ab < Rational(1, 3), "q = alpha*beta/n < 1/(3n)");
    const Prob q = Prob::rational(ab / Rational(big(n)));
    const Prob p = Prob::rational(beta / Rational(big(n)));
    Census census = subgraph_census(h);
    auto sc = is_q_sparse(census, n, q);
    rep.note(sc.sparse, "h is q-sparse");

    for (const auto& entry : census.entries) {
        ExpectedCount ex = expected_count(entry.rep, n, p);
        CheckRow row;
        row.label = "class v=" + std::to_string(entry.v) + " e=" + std::to_string(entry.e) + " " +
                    code_hex(entry.code);
        CmpResult c = ex.cmp(Rational(entry.copies));
        row.pass = c.ge();
        row.near_tie = c.near_tie;
        row.detail = "N=" + to_string(entry.copies) + " log2(E_p)=" + fmt(ex.log2());
        rep.add(std::move(row));
    }
    return rep;
}

}  // namespace tlab
