#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "threshold_lab/errors.hpp"
#include "threshold_lab/family.hpp"
#include "threshold_lab/thresholds.hpp"
#include "threshold_lab/verify.hpp"
#include "threshold_lab/wz_tree.hpp"

using namespace tlab;

namespace {

Prob sparse_boundary(const Graph& h, long long n) {
    return p_expectation(h, n, Rational(1)).p;
}

Graph star_host(int leaves) {
    Graph h = graphs::empty(16);
    for (int i = 1; i <= leaves; ++i) h.add_edge(0, i);
    return h;
}

}  // namespace

TEST_CASE("report bookkeeping") {
    VerifyReport inner;
    inner.suite = "x";
    CheckRow ok;
    ok.label = "fine";
    inner.add(ok);
    CheckRow bad;
    bad.label = "broken";
    bad.pass = false;
    inner.add(bad);
    CheckRow skip;
    skip.label = "skipped";
    skip.applicable = false;
    inner.add(skip);
    CHECK(inner.checked == 2);
    CHECK(inner.passed == 1);
    CHECK(inner.failed == 1);
    CHECK(inner.advisories == 1);
    CHECK(!inner.all_pass);

    VerifyReport outer;
    outer.absorb(inner, "a ");
    CHECK(outer.failed == 1);
    CHECK(outer.rows.size() == 3);
    CHECK(outer.rows[0].label == "a fine");

    // with unmet hypotheses every absorbed row is demoted to advisory
    VerifyReport shaky = inner;
    shaky.note(false, "some precondition");
    VerifyReport outer2;
    outer2.absorb(shaky, "b ");
    CHECK(outer2.failed == 0);
    CHECK(outer2.checked == 0);
    CHECK(outer2.advisories == 3);
}

TEST_CASE("edge-disjoint copy bound") {
    const long long n = 64;
    Graph h = star_host(5);
    RootedGraph edge = RootedGraph::on(graphs::path(2), {0});

    VerifyReport rep = verify_lemma_f_fixed(h, edge, {0}, n, sparse_boundary(h, n));
    CHECK(rep.hypotheses_met);
    CHECK(rep.checked == 1);
    CHECK(rep.failed == 0);

    // a clique is nowhere near sparse at a tiny q
    VerifyReport rep2 =
        verify_lemma_f_fixed(graphs::clique(5), edge, {0}, n,
                             Prob::rational(Rational(1, 1000000)));
    CHECK(!rep2.hypotheses_met);
}

TEST_CASE("copy component bound") {
    const long long n = 64;
    {
        Graph h = star_host(5);
        RootedGraph edge = RootedGraph::on(graphs::path(2), {0});
        VerifyReport rep = verify_lemma_f_gen(h, edge, {0}, n);
        CHECK(rep.hypotheses_met);  // e(B,A) != 0 is the only checked note
        CHECK(rep.failed == 0);
        // singleton-copy row plus one row per component
        CHECK(rep.checked == 6);
    }
    {
        // two paths through vertex 1 share the internal copy edge
        Graph h = graphs::empty(16);
        h.add_edge(0, 1);
        h.add_edge(1, 2);
        h.add_edge(1, 3);
        VerifyReport rep =
            verify_lemma_f_gen(h, RootedGraph::on(graphs::path(3), {0}), {0}, n);
        CHECK(rep.failed == 0);
        REQUIRE(rep.rows.size() == 1);
        CHECK(rep.rows[0].detail.find("copies=2") != std::string::npos);
    }
    {
        // no rooted edges: nothing the bound can say
        Graph pat(2);
        VerifyReport rep =
            verify_lemma_f_gen(star_host(3), RootedGraph::on(pat, {0}), {0}, n);
        CHECK(!rep.hypotheses_met);
        CHECK(rep.failed == 0);
        CHECK(rep.advisories > 0);
    }
}

TEST_CASE("tree union bound") {
    const long long n = 1024;
    Graph cherry(3);
    cherry.add_edge(0, 1);
    cherry.add_edge(0, 2);
    RootedGraph r = RootedGraph::on(cherry, {0});
    const Prob rr = Prob::rational(Rational(3, 4096));  // inside the leading window

    WZTreeGen trees = generate_wz_trees(r, 3);
    VerifyReport rep = verify_lemma_tree_hard(r, cherry, n, rr, trees);
    CHECK(rep.hypotheses_met);
    CHECK(rep.checked == static_cast<int>(trees.trees.size()));
    CHECK(rep.failed == 0);
    REQUIRE(rep.metrics.size() == 1);
    CHECK(rep.metrics[0].first == "conjecture_min_K");
    CHECK(rep.metrics[0].second > 0.0);

    CHECK_THROWS_AS(verify_lemma_tree_hard(r, graphs::clique(3), n, rr, trees), DomainError);
}

TEST_CASE("sunflower absence") {
    const long long n = 1024;
    Graph cherry(3);
    cherry.add_edge(0, 1);
    cherry.add_edge(0, 2);
    RootedGraph r = RootedGraph::on(cherry, {0});
    VerifyReport rep = verify_no_sunflower(r, cherry, n, Prob::rational(Rational(3, 4096)));
    CHECK(rep.hypotheses_met);
    CHECK(rep.failed == 0);
    REQUIRE(!rep.rows.empty());
    CHECK(rep.rows[0].detail.find("k=2") != std::string::npos);
}

TEST_CASE("automorphism bounds") {
    {
        VerifyReport rep = verify_aut_bounds(RootedGraph::on(graphs::star(3), {}), 16, 16);
        CHECK(rep.checked == 2);
        CHECK(rep.failed == 0);
        REQUIRE(rep.metrics.size() == 1);
        CHECK(rep.metrics[0].second > 0.0);
    }
    {
        // an isolated nonroot voids both bounds
        Graph g(3);
        g.add_edge(0, 1);
        VerifyReport rep = verify_aut_bounds(RootedGraph::on(g, {}), 16, 16);
        CHECK(rep.checked == 0);
        CHECK(rep.advisories == 2);
    }
}

TEST_CASE("disjoint tree copies vs expectation") {
    const long long n = 64;
    Graph h = star_host(5);
    VerifyReport rep = verify_claim_nu(h, graphs::path(2), n, sparse_boundary(h, n));
    CHECK(rep.hypotheses_met);
    CHECK(rep.failed == 0);

    VerifyReport rep2 = verify_claim_nu(h, graphs::clique(3), n, sparse_boundary(h, n));
    CHECK(!rep2.hypotheses_met);
}

TEST_CASE("cycle exclusion") {
    VerifyReport rep = verify_cycle_exclusion(100, Prob::rational(Rational(9, 1000)), 50, 6);
    CHECK(rep.failed == 0);
    CHECK(rep.checked == 48 + 6);
    CHECK_THROWS_AS(verify_cycle_exclusion(100, Prob::rational(Rational(1, 50)), 10),
                    DomainError);
}

TEST_CASE("chain bound end to end") {
    const long long n = 1024;
    SplitMix64 rng(99);
    Graph h = random_forest(1024, 10, 0.3, rng);
    if (h.edge_count() == 0) h.add_edge(0, 1);
    Prob q = sparse_boundary(h, n);
    REQUIRE(contains_copy(h, graphs::path(3)));

    VerifyReport rep = verify_chain_bound(h, graphs::path(3), n, q);
    CHECK(rep.hypotheses_met);
    CHECK(rep.failed == 0);
    CHECK(rep.checked >= 3);  // at least one step row plus the two global rows

    CHECK_THROWS_AS(verify_chain_bound(h, graphs::path(3), 100, q), DomainError);
    CHECK_THROWS_AS(verify_chain_bound(graphs::path(3), graphs::path(3), n, q), DomainError);
}

TEST_CASE("small-q host bound") {
    Graph h = graphs::empty(12);
    h.add_edge(0, 1);
    h.add_edge(2, 3);
    h.add_edge(3, 4);
    h.add_edge(5, 6);
    h.add_edge(6, 7);
    h.add_edge(7, 8);

    VerifyReport rep = verify_small_q_theorem(h, 1000000, Rational(1, 2),
                                              Rational(67667, 1000000));
    CHECK(rep.hypotheses_met);
    CHECK(rep.failed == 0);
    CHECK(rep.checked > 3);

    VerifyReport rep2 = verify_small_q_theorem(h, 1000000, Rational(1), Rational(9, 10));
    CHECK(!rep2.hypotheses_met);
}

TEST_CASE("suite dispatch") {
    VerifyReport fc = run_suite("forest-count");
    CHECK(fc.suite == "forest-count");
    CHECK(fc.checked == 28);  // (t, m) pairs for t <= 7
    CHECK(fc.failed == 0);

    VerifyReport cy = run_suite("cycles");
    CHECK(cy.failed == 0);

    CHECK_THROWS_AS(run_suite("nope"), UsageError);
}
