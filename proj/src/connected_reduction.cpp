#include "threshold_lab/connected_reduction.hpp"

#include <cmath>

namespace tlab {

ConnReductionReport verify_connected_reduction(const Graph& h, long long n, const Prob& p_prime,
                                               int census_cap) {
    if (n < h.vertex_count()) throw HostTooSmall(n, h.vertex_count());
    Census census = subgraph_census(h, census_cap);
    ConnReductionReport rep;
    rep.hypothesis_met = true;
    rep.conclusion_ok = true;
    double log2_p = 2 * kLog2E + p_prime.log2();  // p = e^2 p'
    rep.p_log2 = log2_p;
    rep.rate_above_one = log2_p > 0;

    for (const CensusEntry& entry : census.entries) {
        ConnReductionEntry row;
        row.code = entry.code;
        row.v = entry.v;
        row.e = entry.e;
        row.copies = entry.copies;
        row.connected = entry.rep.connected();
        if (row.connected) {
            ExpectedCount ec;
            ec.falling = falling_factorial(n, entry.v);
            ec.e = static_cast<unsigned>(entry.e);
            ec.aut = entry.aut;
            ec.p = p_prime;
            ec.n = n;
            ec.v = entry.v;
            row.hyp_ok = ec.cmp(Rational(entry.copies)).ge();
            if (!row.hyp_ok) rep.hypothesis_met = false;
        }
        double log2_e_p = log2_value(falling_factorial(n, entry.v)) - log2_value(entry.aut) +
                          static_cast<double>(entry.e) * log2_p;
        row.concl_margin_log2 = log2_e_p - log2_value(entry.copies);
        row.concl_ok = row.concl_margin_log2 >= -kLogTol;
        if (!row.concl_ok) rep.conclusion_ok = false;
        rep.entries.push_back(std::move(row));
    }
    rep.advisory = !rep.hypothesis_met;

    // Classes with isolated vertices never appear in the census; they are
    // covered by exact identities.  With F = F' + y isolated vertices:
    //   aut(F) = aut(F') * y!,
    //   E_p X_F = E_p X_{F'} * C(n - v', y),
    //   N(h, F) = N(h, F') * C(v_h - v', y),
    // so N <= E at p transfers from F' to F because C(v_h - v', y) <=
    // C(n - v', y) whenever n >= v_h.
    rep.isolate_identity_ok = true;
    long vh = h.vertex_count();
    for (const CensusEntry& entry : census.entries) {
        for (long y = 1; y <= std::min<long>(2, vh - entry.v); ++y) {
            Graph padded(entry.v + static_cast<int>(y));
            for (auto [u, w] : entry.rep.edges()) padded.add_edge(u, w);
            BigInt fact = 1;
            for (long i = 2; i <= y; ++i) fact *= i;
            if (aut_count(padded) != entry.aut * fact) rep.isolate_identity_ok = false;
            // falling-factorial identity behind the E_p step
            if (falling_factorial(n, entry.v + static_cast<unsigned>(y)) !=
                falling_factorial(n, entry.v) *
                    falling_factorial(n - entry.v, static_cast<unsigned>(y)))
                rep.isolate_identity_ok = false;
            if (binomial(static_cast<unsigned long>(vh - entry.v), static_cast<unsigned long>(y)) >
                binomial(static_cast<unsigned long>(n - entry.v), static_cast<unsigned long>(y)))
                rep.isolate_identity_ok = false;
            if (y == 1 && vh <= 8) {
                // direct copy-count cross-check on small hosts
                if (count_copies(h, padded) != entry.copies * BigInt(vh - entry.v))
                    rep.isolate_identity_ok = false;
            }
        }
    }
    rep.isolate_note = "aut, falling-factorial and copy-count identities for padded classes";
    return rep;
}

}  // namespace tlab
