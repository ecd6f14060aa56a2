#include "threshold_lab/thresholds.hpp"

#include "threshold_lab/graph6.hpp"

namespace tlab {

CmpResult ExpectedCount::cmp(const Rational& t, double tol) const {
    // (n)_v p^e / aut >= t  <=>  p^e >= t * aut / (n)_v
    if (falling == 0) return {t > 0 ? -1 : (t == 0 ? 0 : 1), true, false};
    Rational rhs = t * make_rational(aut, falling);
    return p.cmp_pow(e, rhs, tol);
}

double ExpectedCount::log2() const {
    return log2_value(falling) - log2_value(aut) + static_cast<double>(e) * p.log2();
}

Rational ExpectedCount::exact_rational() const {
    if (!has_exact_rational()) throw DomainError("expected count is not an exact rational");
    return make_rational(falling, aut) * rat_pow(p.base(), e);
}

ExpectedCount expected_count(const Graph& j, long long n, const Prob& p) {
    if (n < j.vertex_count()) throw HostTooSmall(n, j.vertex_count());
    ExpectedCount out;
    out.falling = falling_factorial(n, static_cast<unsigned>(j.vertex_count()));
    out.e = static_cast<unsigned>(j.edge_count());
    out.aut = aut_count(j);
    out.p = p;
    out.n = n;
    out.v = j.vertex_count();
    return out;
}

namespace {

// Threshold over census constraints: the minimal feasible p is the max over
// entries of (theta * weight(I) * aut(I) / (n)_{v_I})^{1 / e_I}.
ThresholdResult census_threshold(const Graph& h, long long n, const Rational& theta,
                                 int max_census_edges, bool star) {
    if (n < h.vertex_count()) throw HostTooSmall(n, h.vertex_count());
    if (h.edge_count() < 1) throw DomainError("threshold needs a graph with at least one edge");
    if (theta <= 0) throw DomainError("theta must be positive");
    Census census = subgraph_census(h, max_census_edges);
    std::optional<ThresholdResult> best;
    for (const CensusEntry& entry : census.entries) {
        Rational base = theta * make_rational(entry.aut, falling_factorial(n, entry.v));
        if (star) base *= Rational(entry.copies);
        Prob cand = Prob::nth_root(base, entry.e);
        bool take = false;
        if (!best) {
            take = true;
        } else {
            int sign = cand.cmp(best->p).sign;
            take = sign > 0 || (sign == 0 && entry.code < best->binding_code);
        }
        if (take)
            best = ThresholdResult{cand, entry.code, entry.rep, base,
                                   static_cast<unsigned>(entry.e)};
    }
    return *best;  // nonempty: h has an edge
}

}  // namespace

ThresholdResult p_expectation(const Graph& h, long long n, const Rational& theta,
                              int max_census_edges) {
    return census_threshold(h, n, theta, max_census_edges, false);
}

ThresholdResult p_expectation_star(const Graph& h, long long n, const Rational& theta,
                                   int max_census_edges) {
    return census_threshold(h, n, theta, max_census_edges, true);
}

SparseCheck is_q_sparse(const Graph& h, long long n, const Prob& q, const Rational& theta,
                        int max_census_edges) {
    if (n < h.vertex_count()) throw HostTooSmall(n, h.vertex_count());
    return is_q_sparse(subgraph_census(h, max_census_edges), n, q, theta);
}

SparseCheck is_q_sparse(const Census& census, long long n, const Prob& q, const Rational& theta) {
    if (n < census.host_vertices) throw HostTooSmall(n, census.host_vertices);
    if (theta <= 0) throw DomainError("theta must be positive");
    SparseCheck out;
    out.sparse = true;
    for (const CensusEntry& entry : census.entries) {
        ExpectedCount ec;
        ec.falling = falling_factorial(n, entry.v);
        ec.e = static_cast<unsigned>(entry.e);
        ec.aut = entry.aut;
        ec.p = q;
        ec.n = n;
        ec.v = entry.v;
        CmpResult cmp = ec.cmp(theta);
        if (cmp.near_tie) out.near_tie = true;
        if (cmp.lt()) {
            out.sparse = false;
            SparseWitness w;
            w.code = entry.code;
            w.rep = entry.rep;
            if (ec.has_exact_rational()) w.expectation = ec.exact_rational();
            w.expectation_log2 = ec.log2();
            out.witness = std::move(w);
            return out;
        }
    }
    return out;
}

std::vector<RatioRow> ratio_scan(const std::vector<Graph>& family, long long n,
                                 const Rational& theta, int max_census_edges) {
    std::vector<RatioRow> rows;
    rows.reserve(family.size());
    for (const Graph& g : family) {
        RatioRow row;
        row.g = g;
        row.graph6 = write_graph6(g);
        try {
            row.code = canonical_form(g).code;
            row.pe = p_expectation(g, n, theta, max_census_edges);
            row.pe_star = p_expectation_star(g, n, theta, max_census_edges);
            row.ratio_log2 = row.pe_star->p.log2() - row.pe->p.log2();
        } catch (const Error& err) {
            row.error = err.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace tlab
