#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "oracles.hpp"
#include "threshold_lab/sampling.hpp"
#include "threshold_lab/thresholds.hpp"

using namespace tlab;

namespace {

Graph random_graph(int n, double p, std::uint64_t seed) {
    SplitMix64 rng(seed);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.unit() <= p) g.add_edge(i, j);
    return g;
}

std::vector<Graph> connected_reps(int max_v) {
    std::vector<Graph> reps;
    std::set<std::string> seen;
    for (int n = 2; n <= max_v; ++n)
        for (const auto& g : oracle::all_labeled_graphs(n)) {
            if (!g.connected()) continue;
            auto code = canonical_form(g).code;
            if (seen.insert(code).second) reps.push_back(canonical_copy(g));
        }
    return reps;
}

}  // namespace

TEST_CASE("expected counts") {
    ExpectedCount ec = expected_count(graphs::clique(3), 10, Prob::rational(Rational(1, 10)));
    REQUIRE(ec.has_exact_rational());
    CHECK(ec.exact_rational() == Rational(3, 25));  // 720/1000/6 = 0.12
    CHECK(ec.cmp(Rational(1, 10)).gt());
    CHECK(ec.cmp(Rational(3, 25)).sign == 0);
    CHECK(ec.cmp(Rational(1, 2)).lt());
    CHECK(std::abs(ec.log2() - std::log2(0.12)) < 1e-12);
    CHECK_THROWS_AS(expected_count(graphs::clique(3), 2, Prob::one()), HostTooSmall);
}

TEST_CASE("p_E on tiny graphs at n = 10") {
    auto pe_k2 = p_expectation(graphs::clique(2), 10);
    CHECK(pe_k2.p.cmp(Prob::rational(Rational(1, 90))).sign == 0);

    auto pe_p3 = p_expectation(graphs::path(3), 10);
    // binding constraint is the full path: p = (1/720)^{1/2}
    CHECK(pe_p3.p.cmp(Prob::nth_root(Rational(1, 720), 2)).sign == 0);
    CHECK(pe_p3.binding_code == canonical_form(graphs::path(3)).code);
    CHECK(std::abs(pe_p3.p.approx() - 0.03726779962) < 1e-9);

    auto pe_k3 = p_expectation(graphs::clique(3), 10);
    CHECK(pe_k3.p.cmp(Prob::nth_root(Rational(1, 240), 3)).sign == 0);
    CHECK(pe_k3.binding_code == canonical_form(graphs::clique(3)).code);
    CHECK(std::abs(pe_k3.p.approx() - std::cbrt(1.0 / 240.0)) < 1e-12);
}

TEST_CASE("p_E* on tiny graphs at n = 10") {
    auto star_k3 = p_expectation_star(graphs::clique(3), 10);
    // N(K_3, K_3) = 1, so the triangle constraint matches p_E and still binds
    CHECK(star_k3.p.cmp(Prob::nth_root(Rational(1, 240), 3)).sign == 0);
    auto pe_k3 = p_expectation(graphs::clique(3), 10);
    CHECK(star_k3.p.cmp(pe_k3.p).sign == 0);

    // dominated constraints, frozen by hand: edge gives 3/90 = 1/30,
    // path gives (1/240)^{1/2}
    Census census = subgraph_census(graphs::clique(3));
    const CensusEntry* k2 = census.find(canonical_form(graphs::clique(2)).code);
    REQUIRE(k2 != nullptr);
    CHECK(k2->copies == 3);
    auto p3_constraint = Prob::nth_root(Rational(1, 240), 2);
    CHECK(p3_constraint.cmp(star_k3.p).lt());
}

TEST_CASE("p_E <= p_E* always") {
    for (int t = 0; t < 20; ++t) {
        Graph g = random_graph(6, 0.5, 4242 + t);
        if (g.edge_count() < 1 || g.edge_count() > 15) continue;
        auto pe = p_expectation(g, 64);
        auto star = p_expectation_star(g, 64);
        CHECK(pe.p.cmp(star.p).le());
    }
}

TEST_CASE("p_E against the no-dedup subset oracle") {
    // oracle: maximize over raw edge subsets, computing aut by permutation
    // filter and the expectation in log space
    for (int t = 0; t < 8; ++t) {
        Graph h = random_graph(5, 0.6, 31 + t);
        if (h.edge_count() < 1) continue;
        long long n = 40;
        auto pairs = h.edges();
        double best = -1e300;
        for (std::uint32_t mask = 1; mask < (1u << pairs.size()); ++mask) {
            std::vector<std::pair<int, int>> sub;
            for (std::size_t b = 0; b < pairs.size(); ++b)
                if ((mask >> b) & 1) sub.push_back(pairs[b]);
            Graph span = Graph::from_edges(h.vertex_count(), sub).without_isolates();
            double fall = 1;
            for (int i = 0; i < span.vertex_count(); ++i) fall *= static_cast<double>(n - i);
            double lg = (std::log2(0.5) + std::log2(static_cast<double>(oracle::aut_count(span))) -
                         std::log2(fall)) /
                        static_cast<double>(span.edge_count());
            best = std::max(best, lg);
        }
        auto pe = p_expectation(h, n);
        CHECK(std::abs(pe.p.log2() - best) < 1e-9);
    }
}

TEST_CASE("star family thresholds match closed forms at n = 10^4") {
    const long long n = 10000;
    for (int d = 1; d <= 8; ++d) {
        Graph star = graphs::star(d);
        auto pe = p_expectation(star, n);
        auto star_pe = p_expectation_star(star, n);
        double best_pe = -1e300, best_star = -1e300;
        for (int j = 1; j <= d; ++j) {
            // subgraph classes of a star are the stars K_{1,j}: aut = j! for
            // j >= 2 but 2 for the bare edge; N = C(d, j) for j >= 2, d for
            // j = 1
            double fact = 1, fall = static_cast<double>(n);
            for (int i = 1; i <= j; ++i) {
                fact *= i;
                fall *= static_cast<double>(n - i);
            }
            if (j == 1) fact = 2;
            double copies = (j == 1) ? d : static_cast<double>(mpz_get_d(binomial(d, j).get_mpz_t()));
            best_pe = std::max(best_pe, (std::log2(0.5 * fact) - std::log2(fall)) / j);
            best_star =
                std::max(best_star, (std::log2(0.5 * copies * fact) - std::log2(fall)) / j);
        }
        CHECK(std::abs(pe.p.log2() - best_pe) < 1e-9);
        CHECK(std::abs(star_pe.p.log2() - best_star) < 1e-9);
        CHECK(pe.p.cmp(star_pe.p).le());
    }
}

TEST_CASE("q-sparseness") {
    auto yes = is_q_sparse(graphs::path(3), 10, Prob::rational(Rational(6, 100)));
    CHECK(yes.sparse);
    CHECK(!yes.witness.has_value());
    auto no = is_q_sparse(graphs::path(3), 10, Prob::rational(Rational(5, 100)));
    CHECK(!no.sparse);
    REQUIRE(no.witness.has_value());
    CHECK(no.witness->code == canonical_form(graphs::path(3)).code);
    REQUIRE(no.witness->expectation.has_value());
    CHECK(*no.witness->expectation == Rational(9, 10));  // 720 * 0.0025 / 2
    // an edgeless graph is vacuously sparse
    CHECK(is_q_sparse(Graph(3), 10, Prob::zero()).sparse);
}

TEST_CASE("sparseness boundary at the theta = 1 threshold") {
    std::vector<Graph> gs{graphs::clique(3), graphs::path(4), graphs::star(3),
                          random_graph(6, 0.5, 99)};
    for (const auto& g : gs) {
        if (g.edge_count() < 1) continue;
        auto qstar = p_expectation(g, 100, Rational(1));
        CHECK(is_q_sparse(g, 100, qstar.p).sparse);
        auto below = qstar.p.scaled(Rational(999, 1000));
        CHECK(!is_q_sparse(g, 100, below).sparse);
        // monotonicity: anything above the boundary stays sparse
        CHECK(is_q_sparse(g, 100, qstar.p.scaled(Rational(2))).sparse);
    }
}

TEST_CASE("ratio scan over connected graphs on <= 4 vertices") {
    auto family = connected_reps(4);
    CHECK(family.size() == 9);
    auto rows = ratio_scan(family, 100);
    CHECK(rows.size() == 9);
    for (const auto& row : rows) {
        REQUIRE(!row.error.has_value());
        CHECK(row.pe->p.cmp(row.pe_star->p).le());
        CHECK(row.ratio_log2 >= -1e-9);
    }
}

TEST_CASE("threshold error paths") {
    CHECK_THROWS_AS(p_expectation(graphs::clique(3), 2), HostTooSmall);
    CHECK_THROWS_AS(p_expectation(Graph(3), 10), DomainError);
    CHECK_THROWS_AS(p_expectation(graphs::clique(8), 100), CensusTooLarge);
    CHECK_THROWS_AS(p_expectation(graphs::clique(3), 10, Rational(0)), DomainError);
    auto rows = ratio_scan({graphs::clique(8)}, 100);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].error.has_value());
}

TEST_CASE("gnp sampler basics") {
    Graph g(20);
    SplitMix64 rng(7);
    sample_gnp(g, 0.0, rng);
    CHECK(g.edge_count() == 0);
    sample_gnp(g, 1.0, rng);
    CHECK(g.edge_count() == 190);
    // determinism for a fixed stream seed
    Graph a(30), b(30);
    SplitMix64 r1(sample_stream_seed(5, 1, 2)), r2(sample_stream_seed(5, 1, 2));
    sample_gnp(a, 0.3, r1);
    sample_gnp(b, 0.3, r2);
    CHECK(a == b);
    // mean edge count sanity: 435 * 0.3 = 130.5, sd ~ 9.6
    long total = 0;
    for (int s = 0; s < 200; ++s) {
        SplitMix64 r(sample_stream_seed(11, 0, s));
        sample_gnp(a, 0.3, r);
        total += a.edge_count();
    }
    double mean = total / 200.0;
    CHECK(mean > 120.0);
    CHECK(mean < 141.0);
}

TEST_CASE("containment kernels agree serial vs parallel") {
    SubgraphTester tester(graphs::clique(3));
    for (double p : {0.05, 0.2, 0.5}) {
        long long serial = containment_hits_serial(tester, 25, p, 400, 97, 3);
        for (int jobs : {1, 2, 4}) {
            long long par = containment_hits_parallel(tester, 25, p, 400, 97, 3, jobs);
            CHECK(par == serial);
        }
    }
}

TEST_CASE("wilson interval") {
    double lo, hi;
    wilson_interval(50, 100, 1.96, lo, hi);
    CHECK(lo < 0.5);
    CHECK(hi > 0.5);
    CHECK(lo > 0.40);
    CHECK(hi < 0.60);
    wilson_interval(0, 100, 1.96, lo, hi);
    CHECK(lo == 0.0);
    CHECK(hi < 0.05);
    wilson_interval(100, 100, 1.96, lo, hi);
    CHECK(hi <= 1.0);
    CHECK(hi > 0.99);
    CHECK(lo > 0.95);
}

TEST_CASE("pc bisection on a single edge at n = 20") {
    // Pr[G(20,p) has an edge] = 1 - (1-p)^190 = 1/2 at p = 1 - 2^{-1/190}
    double truth = 1.0 - std::pow(2.0, -1.0 / 190.0);
    PcOptions opts;
    opts.samples = 4000;
    PcEstimate est = pc_monte_carlo(graphs::clique(2), 20, opts);
    CHECK(est.conclusive);
    CHECK(est.ci_lo <= truth);
    CHECK(est.ci_hi >= truth);
    CHECK(std::abs(est.estimate - truth) / truth < 0.10);
    // determinism
    PcEstimate again = pc_monte_carlo(graphs::clique(2), 20, opts);
    CHECK(again.estimate == est.estimate);
    CHECK(again.total_samples == est.total_samples);
    // serial path matches the parallel default
    PcOptions serial_opts = opts;
    serial_opts.parallel = false;
    PcEstimate serial = pc_monte_carlo(graphs::clique(2), 20, serial_opts);
    CHECK(serial.estimate == est.estimate);
}

TEST_CASE("pc error paths") {
    PcOptions opts;
    opts.samples = 10;
    CHECK_THROWS_AS(pc_monte_carlo(graphs::clique(2), 20, opts), DomainError);
    CHECK_THROWS_AS(pc_monte_carlo(graphs::clique(5), 3, {}), HostTooSmall);
    CHECK_THROWS_AS(pc_monte_carlo(Graph(3), 10, {}), DomainError);
}
