#pragma once

#include <cstdint>
#include <vector>

#include "threshold_lab/census.hpp"
#include "threshold_lab/graph.hpp"

namespace tlab {

// Deterministic 64-bit stream (splitmix64).  Each Monte Carlo sample gets its
// own stream derived from (seed, stream id, sample index), so results do not
// depend on how samples are split across threads.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t s) : state(s) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in (0, 1]
    double unit() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }
};

std::uint64_t sample_stream_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

// Writes a G(n, p) sample into `out` (must have n vertices) via geometric
// skips over the pair sequence.
void sample_gnp(Graph& out, double p, SplitMix64& rng);

// Number of samples (out of `samples`) whose G(n,p) draw contains the
// pattern.  The serial and parallel versions agree exactly.
long long containment_hits_serial(const SubgraphTester& tester, int n, double p,
                                  long long samples, std::uint64_t seed, std::uint64_t stream);
long long containment_hits_parallel(const SubgraphTester& tester, int n, double p,
                                    long long samples, std::uint64_t seed, std::uint64_t stream,
                                    int jobs = 0);

struct ProbeRecord {
    double p = 0;
    long long samples = 0;
    long long hits = 0;
    double wilson_lo = 0;
    double wilson_hi = 0;
};

struct PcOptions {
    long long samples = 10000;
    std::uint64_t seed = 20260823;
    double rel_width = 0.10;  // stop when hi - lo <= rel_width * mid
    int max_probes = 60;
    int max_doublings = 3;
    double z = 1.959963984540054;  // 95% Wilson
    int jobs = 0;
    bool parallel = true;
};

struct PcEstimate {
    double estimate = 0;
    double ci_lo = 0;
    double ci_hi = 0;
    bool conclusive = false;
    long long total_samples = 0;
    std::vector<ProbeRecord> probes;
};

// Wilson score interval for a binomial proportion.
void wilson_interval(long long hits, long long n, double z, double& lo, double& hi);

// Bisection estimate of the p where Pr[G(n,p) contains the pattern] = 1/2.
// Probes whose interval straddles 1/2 get their sample budget doubled up to
// max_doublings.  A probe that stays statistically pinned at 1/2 ends the
// search at that p; its Wilson width, divided by the hit-rate slope observed
// across the bracket, gives the confidence interval.  `conclusive` reports
// whether the interval beat rel_width.
PcEstimate pc_monte_carlo(const Graph& pattern, long long n, const PcOptions& opts = {});

}  // namespace tlab
