#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "threshold_lab/census.hpp"
#include "threshold_lab/graph.hpp"
#include "threshold_lab/sampling.hpp"

using namespace tlab;

TEST_CASE("census agrees across job counts") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        Graph g = graphs::empty(12);
        SplitMix64 rng(seed);
        sample_gnp(g, 0.3, rng);
        if (g.edge_count() > 18 || g.edge_count() == 0) continue;

        Census serial = subgraph_census_serial(g);
        for (int jobs : {1, 2, 4}) {
            Census par = subgraph_census(g, 20, jobs);
            REQUIRE(par.entries.size() == serial.entries.size());
            for (std::size_t i = 0; i < serial.entries.size(); ++i) {
                CHECK(par.entries[i].code == serial.entries[i].code);
                CHECK(par.entries[i].copies == serial.entries[i].copies);
                CHECK(par.entries[i].aut == serial.entries[i].aut);
            }
        }
    }
}

TEST_CASE("containment hits agree across job counts") {
    SubgraphTester tester(graphs::clique(3));
    const long long samples = 4000;
    const long long base =
        containment_hits_serial(tester, 30, 0.05, samples, 20260823, 5);
    CHECK(base > 0);
    CHECK(base < samples);
    for (int jobs : {1, 2, 4})
        CHECK(containment_hits_parallel(tester, 30, 0.05, samples, 20260823, 5, jobs) == base);
}

TEST_CASE("monte carlo estimate is identical serial vs parallel") {
    PcOptions serial_opts;
    serial_opts.samples = 1000;
    serial_opts.seed = 42;
    serial_opts.parallel = false;
    PcOptions par_opts = serial_opts;
    par_opts.parallel = true;
    par_opts.jobs = 3;

    PcEstimate a = pc_monte_carlo(graphs::path(2), 20, serial_opts);
    PcEstimate b = pc_monte_carlo(graphs::path(2), 20, par_opts);
    CHECK(a.estimate == b.estimate);
    REQUIRE(a.probes.size() == b.probes.size());
    for (std::size_t i = 0; i < a.probes.size(); ++i) {
        CHECK(a.probes[i].p == b.probes[i].p);
        CHECK(a.probes[i].hits == b.probes[i].hits);
    }
}
