// Acceptance gate: one line per criterion, exit 0 only if every line passes.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "threshold_lab/family.hpp"
#include "threshold_lab/leading.hpp"
#include "threshold_lab/sampling.hpp"
#include "threshold_lab/thresholds.hpp"
#include "threshold_lab/verify.hpp"

using namespace tlab;

namespace {

using Verdict = std::pair<bool, std::string>;

Verdict threshold_sandwich() {
    const long long n = 100;
    int compared = 0;
    for (const Graph& g : connected_classes(2, 5)) {
        ThresholdResult pe = p_expectation(g, n);
        ThresholdResult star = p_expectation_star(g, n);
        if (!pe.p.cmp(star.p).le()) return {false, "p_E > p_E* for a graph on " +
                                                       std::to_string(g.vertex_count()) + " vertices"};
        ++compared;
    }

    // Monte Carlo upper CI vs p_E* for five cheap patterns
    const std::vector<Graph> probes = {graphs::path(2), graphs::path(3), graphs::clique(3),
                                       graphs::path(4), graphs::cycle(4)};
    PcOptions opts;  // 10^4 samples per probe
    for (const Graph& g : probes) {
        ThresholdResult star = p_expectation_star(g, n);
        PcEstimate est = pc_monte_carlo(g, n, opts);
        if (!est.conclusive) return {false, "inconclusive p_c estimate"};
        if (star.p.approx() > est.ci_hi)
            return {false, "p_E* above the p_c CI (" + std::to_string(star.p.approx()) + " > " +
                               std::to_string(est.ci_hi) + ")"};
    }
    return {true, std::to_string(compared) + " exact comparisons, 5 Monte Carlo sandwiches"};
}

// max over nonempty edge subsets (no isomorphism dedup) of the per-subgraph
// threshold (theta*aut/(n)_v)^(1/e)
double oracle_pe(const Graph& h, long long n, double theta) {
    const auto edges = h.edges();
    double best = 0;
    for (unsigned mask = 1; mask < (1u << edges.size()); ++mask) {
        std::vector<int> verts;
        std::vector<std::pair<int, int>> kept;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (mask & (1u << i)) {
                kept.push_back(edges[i]);
                verts.push_back(edges[i].first);
                verts.push_back(edges[i].second);
            }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        Graph s(static_cast<int>(verts.size()));
        for (auto [u, v] : kept) {
            const auto iu = std::lower_bound(verts.begin(), verts.end(), u) - verts.begin();
            const auto iv = std::lower_bound(verts.begin(), verts.end(), v) - verts.begin();
            s.add_edge(static_cast<int>(iu), static_cast<int>(iv));
        }
        const double aut = static_cast<double>(oracle::aut_count(s));
        const double fall = mpz_get_d(falling_factorial(n, static_cast<unsigned>(s.vertex_count()))
                                          .get_mpz_t());
        best = std::max(best, std::pow(theta * aut / fall, 1.0 / static_cast<double>(kept.size())));
    }
    return best;
}

Verdict closed_forms() {
    const double tol = 1e-9;
    struct Case {
        Graph g;
        double closed;
        const char* label;
    };
    const std::vector<Case> cases = {
        {graphs::clique(3), std::cbrt(3.0 / 720.0), "triangle"},
        {graphs::path(3), 1.0 / std::sqrt(720.0), "path-3"},
    };
    for (const Case& c : cases) {
        const double got = p_expectation(c.g, 10).p.approx();
        const double oracle_val = oracle_pe(c.g, 10, 0.5);
        if (std::abs(got - c.closed) > tol * c.closed)
            return {false, std::string(c.label) + " deviates from the closed form"};
        if (std::abs(got - oracle_val) > tol * oracle_val)
            return {false, std::string(c.label) + " deviates from the subset oracle"};
    }
    return {true, "(3/720)^(1/3) and 720^(-1/2) reproduced to 1e-9"};
}

Verdict decomposition_validity() {
    const long long n = 512;
    SplitMix64 rng(20260823);
    int done = 0;
    while (done < 200) {
        const int v = 5 + static_cast<int>(rng.next() % 5);  // 5..9
        Graph g = graphs::empty(v);
        sample_gnp(g, 0.30, rng);
        if (g.edge_count() == 0) continue;
        Prob q = p_expectation(g, n, Rational(1)).p;  // exact sparseness boundary
        LeadingDecomposition dec = leading_decomposition(g, n, q, q);
        if (!validate_decomposition(g, n, q, dec))
            return {false, "invalid chain on a " + std::to_string(v) + "-vertex graph"};
        ++done;
    }
    return {true, "200 chains, every step leading with mu >= 1"};
}

Verdict suite_criterion(const char* suite, const std::function<std::string(const VerifyReport&)>&
                                               describe = nullptr) {
    VerifyReport rep = run_suite(suite);
    if (!rep.hypotheses_met) return {false, "suite hypotheses unmet"};
    if (rep.checked == 0) return {false, "nothing checked"};
    if (rep.failed > 0) {
        for (const CheckRow& row : rep.rows)
            if (row.applicable && !row.pass) return {false, "violation: " + row.label};
        return {false, "violations"};
    }
    std::string detail = std::to_string(rep.checked) + " checks, zero violations";
    if (describe) detail += describe(rep);
    return {true, detail};
}

Verdict monte_carlo_calibration() {
    const double closed = 1.0 - std::pow(2.0, -1.0 / 190.0);  // ~0.003642
    PcOptions opts;  // default seed, 10^4 samples
    PcEstimate a = pc_monte_carlo(graphs::path(2), 20, opts);
    PcEstimate b = pc_monte_carlo(graphs::path(2), 20, opts);
    if (a.estimate != b.estimate) return {false, "not seed reproducible"};
    if (!a.conclusive) return {false, "inconclusive"};
    if (!(a.ci_lo <= closed && closed <= a.ci_hi))
        return {false, "closed form outside CI [" + std::to_string(a.ci_lo) + ", " +
                           std::to_string(a.ci_hi) + "]"};
    if ((a.ci_hi - a.ci_lo) > 0.10 * a.estimate) return {false, "CI wider than 10%"};
    std::ostringstream os;
    os.precision(6);
    os << "estimate " << a.estimate << " vs closed form " << closed;
    return {true, os.str()};
}

}  // namespace

int main() {
    std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
        {"threshold sandwich p_E <= p_E* <= p_c", threshold_sandwich},
        {"closed-form thresholds at n=10", closed_forms},
        {"leading decomposition validity (200 graphs)", decomposition_validity},
        {"small-claims sweep", [] { return suite_criterion("small-claims"); }},
        {"forest count vs brute force", [] { return suite_criterion("forest-count"); }},
        {"automorphism bounds", [] { return suite_criterion("aut-bounds"); }},
        {"tree union bound sweep",
         [] {
             return suite_criterion("tree-hard", [](const VerifyReport& rep) {
                 for (const auto& [name, value] : rep.metrics)
                     if (name == "conjecture_min_K")
                         return "; empirical min K = " + std::to_string(value);
                 return std::string("; min K missing");
             });
         }},
        {"chain bound end to end", [] { return suite_criterion("chain"); }},
        {"small-q theorem check", [] { return suite_criterion("small-q"); }},
        {"Monte Carlo calibration p_c(K_2, 20)", monte_carlo_calibration},
        {"cycle exclusion at (100, 9/1000)", [] { return suite_criterion("cycles"); }},
    };

    bool all = true;
    for (const auto& [name, fn] : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = fn();
        } catch (const std::exception& ex) {
            v = {false, std::string("exception: ") + ex.what()};
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
        std::printf("%s  %-45s %s [%lld ms]\n", v.first ? "PASS" : "FAIL", name,
                    v.second.c_str(), static_cast<long long>(ms));
        std::fflush(stdout);
        all = all && v.first;
    }
    std::printf("%s\n", all ? "ACCEPTANCE: ALL CRITERIA PASS" : "ACCEPTANCE: FAILURES PRESENT");
    return all ? 0 : 1;
}
