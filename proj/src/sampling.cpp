#include "threshold_lab/sampling.hpp"

#include <omp.h>

#include <cmath>

namespace tlab {

std::uint64_t sample_stream_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    SplitMix64 mix(seed ^ (0x9e3779b97f4a7c15ull * (stream + 1)) ^
                   (0xc2b2ae3d27d4eb4full * (index + 1)));
    mix.next();
    return mix.next();
}

void sample_gnp(Graph& out, double p, SplitMix64& rng) {
    out.clear_edges();
    int n = out.vertex_count();
    long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    if (p <= 0 || pairs == 0) return;
    if (p >= 1) {
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) out.add_edge(i, j);
        return;
    }
    double log_q = std::log1p(-p);
    // Pairs are indexed (i, j), i < j, ordered by j then i: block j has size j.
    long long k = -1;
    int j = 1, i = -1;
    while (true) {
        double u = rng.unit();
        long long gap = static_cast<long long>(std::floor(std::log(u) / log_q));
        k += gap + 1;
        if (k >= pairs) return;
        long long advance = gap + 1;
        while (advance > 0) {
            long long room = j - 1 - i;  // remaining slots in block j, after i
            if (advance <= room) {
                i += static_cast<int>(advance);
                advance = 0;
            } else {
                advance -= room;
                ++j;
                i = -1;
            }
        }
        out.add_edge(i, j);
    }
}

namespace {

struct SampleBuffer {
    int n = -1;
    Graph g;
};

bool one_sample(const SubgraphTester& tester, int n, double p, std::uint64_t seed,
                std::uint64_t stream, long long index) {
    thread_local SampleBuffer buf;
    if (buf.n != n) {
        buf.g = Graph(n);
        buf.n = n;
    }
    SplitMix64 rng(sample_stream_seed(seed, stream, static_cast<std::uint64_t>(index)));
    sample_gnp(buf.g, p, rng);
    return tester.contains(buf.g);
}

}  // namespace

long long containment_hits_serial(const SubgraphTester& tester, int n, double p,
                                  long long samples, std::uint64_t seed, std::uint64_t stream) {
    long long hits = 0;
    for (long long s = 0; s < samples; ++s)
        if (one_sample(tester, n, p, seed, stream, s)) ++hits;
    return hits;
}

long long containment_hits_parallel(const SubgraphTester& tester, int n, double p,
                                    long long samples, std::uint64_t seed, std::uint64_t stream,
                                    int jobs) {
    long long hits = 0;
    int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(threads) reduction(+ : hits)
    for (long long s = 0; s < samples; ++s)
        if (one_sample(tester, n, p, seed, stream, s)) ++hits;
    return hits;
}

void wilson_interval(long long hits, long long n, double z, double& lo, double& hi) {
    double nn = static_cast<double>(n);
    double phat = static_cast<double>(hits) / nn;
    double z2 = z * z;
    double denom = 1.0 + z2 / nn;
    double center = (phat + z2 / (2 * nn)) / denom;
    double half = z * std::sqrt(phat * (1 - phat) / nn + z2 / (4 * nn * nn)) / denom;
    lo = std::max(0.0, center - half);
    hi = std::min(1.0, center + half);
}

PcEstimate pc_monte_carlo(const Graph& pattern, long long n, const PcOptions& opts) {
    if (n < pattern.vertex_count()) throw HostTooSmall(n, pattern.vertex_count());
    if (pattern.edge_count() < 1) throw DomainError("pattern needs at least one edge");
    if (opts.samples < 100) throw DomainError("need at least 100 samples per probe");
    if (n > (1ll << 20)) throw DomainError("sampling host too large");

    SubgraphTester tester(pattern);
    PcEstimate out;
    double lo = 0.0, hi = 1.0;
    for (int probe = 0; probe < opts.max_probes; ++probe) {
        double mid = 0.5 * (lo + hi);
        long long budget = opts.samples;
        bool decided = false;
        ProbeRecord rec;
        for (int round = 0; round <= opts.max_doublings; ++round) {
            std::uint64_t stream =
                (static_cast<std::uint64_t>(probe) << 8) | static_cast<std::uint64_t>(round);
            long long hits =
                opts.parallel
                    ? containment_hits_parallel(tester, static_cast<int>(n), mid, budget,
                                                opts.seed, stream, opts.jobs)
                    : containment_hits_serial(tester, static_cast<int>(n), mid, budget, opts.seed,
                                              stream);
            rec.p = mid;
            rec.samples = budget;
            rec.hits = hits;
            wilson_interval(hits, budget, opts.z, rec.wilson_lo, rec.wilson_hi);
            out.total_samples += budget;
            if (rec.wilson_hi < 0.5 || rec.wilson_lo > 0.5) {
                decided = true;
                break;
            }
            budget *= 2;
        }
        out.probes.push_back(rec);
        if (!decided) {
            // Containment probability at mid is statistically indistinguishable
            // from 1/2, which itself pins p_c near mid: convert the residual
            // probability-space uncertainty into a p interval through the
            // empirical slope across the current bracket.
            double phat_lo = 0.0, phat_hi = 1.0;  // exact at p = 0 and p = 1
            for (const ProbeRecord& past : out.probes) {
                const double phat =
                    static_cast<double>(past.hits) / static_cast<double>(past.samples);
                if (past.p == lo) phat_lo = phat;
                if (past.p == hi) phat_hi = phat;
            }
            out.estimate = mid;
            const double slope = (phat_hi - phat_lo) / (hi - lo);
            if (slope > 0) {
                const double delta = (rec.wilson_hi - rec.wilson_lo) / slope;
                out.ci_lo = std::max(lo, mid - delta);
                out.ci_hi = std::min(hi, mid + delta);
            } else {
                out.ci_lo = lo;
                out.ci_hi = hi;
            }
            out.conclusive = (out.ci_hi - out.ci_lo) <= opts.rel_width * mid;
            return out;
        }
        if (rec.wilson_hi < 0.5)
            lo = mid;
        else
            hi = mid;
        if (lo > 0 && (hi - lo) <= opts.rel_width * 0.5 * (lo + hi)) {
            double est = 0.5 * (lo + hi);
            out.estimate = est;
            out.ci_lo = lo;
            out.ci_hi = hi;
            out.conclusive = true;
            return out;
        }
    }
    out.estimate = 0.5 * (lo + hi);
    out.ci_lo = lo;
    out.ci_hi = hi;
    out.conclusive = false;
    return out;
}

}  // namespace tlab
