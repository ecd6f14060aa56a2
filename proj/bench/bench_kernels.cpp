// Timing table for the parallel kernels against their serial references.
// Build and run: cmake --build build --target bench_kernels && ./build/bench/bench_kernels
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "threshold_lab/census.hpp"
#include "threshold_lab/graph.hpp"
#include "threshold_lab/sampling.hpp"
#include "threshold_lab/verify.hpp"

using namespace tlab;

namespace {

long long time_ms(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 t0)
        .count();
}

void row(const char* kernel, const char* variant, long long ms, const std::string& check) {
    std::printf("%-22s %-10s %8lld ms   %s\n", kernel, variant, ms, check.c_str());
}

}  // namespace

int main() {
    std::printf("%-22s %-10s %11s   %s\n", "kernel", "variant", "time", "result");

    {
        // census of a moderately dense host: 2^e subset scan dominates
        Graph g = graphs::empty(14);
        SplitMix64 rng(7);
        sample_gnp(g, 0.2, rng);
        while (g.edge_count() > 18) {
            // trim to a fixed size so runs are comparable
            Graph h = graphs::empty(14);
            int kept = 0;
            for (int u = 0; u < 14; ++u)
                for (int v = u + 1; v < 14; ++v)
                    if (g.has_edge(u, v) && kept < 18) {
                        h.add_edge(u, v);
                        ++kept;
                    }
            g = h;
        }
        std::size_t classes = 0;
        const long long serial =
            time_ms([&] { classes = subgraph_census_serial(g).entries.size(); });
        row("census 18 edges", "serial", serial, std::to_string(classes) + " classes");
        for (int jobs : {1, 2, 4}) {
            std::size_t got = 0;
            const long long par = time_ms([&] { got = subgraph_census(g, 20, jobs).entries.size(); });
            row("census 18 edges", ("jobs=" + std::to_string(jobs)).c_str(), par,
                got == classes ? "agrees" : "MISMATCH");
        }
    }

    {
        SubgraphTester tester(graphs::clique(4));
        const long long samples = 20000;
        long long base = 0;
        const long long serial = time_ms(
            [&] { base = containment_hits_serial(tester, 64, 0.12, samples, 20260823, 9); });
        row("containment 20k", "serial", serial, std::to_string(base) + " hits");
        for (int jobs : {1, 2, 4}) {
            long long got = 0;
            const long long par = time_ms([&] {
                got = containment_hits_parallel(tester, 64, 0.12, samples, 20260823, 9, jobs);
            });
            row("containment 20k", ("jobs=" + std::to_string(jobs)).c_str(), par,
                got == base ? "agrees" : "MISMATCH");
        }
    }

    {
        VerifyReport rep;
        const long long ms = time_ms([&] { rep = run_suite("no-sunflower"); });
        row("verifier sweep", "suite", ms,
            std::to_string(rep.checked) + " checks, " + std::to_string(rep.failed) + " failed");
    }
    return 0;
}
