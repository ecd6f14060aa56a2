#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "threshold_lab/canonical.hpp"
#include "threshold_lab/census.hpp"
#include "threshold_lab/connected_reduction.hpp"
#include "threshold_lab/errors.hpp"
#include "threshold_lab/family.hpp"
#include "threshold_lab/leading.hpp"
#include "threshold_lab/mu.hpp"
#include "threshold_lab/small_claims.hpp"
#include "threshold_lab/sunflower.hpp"
#include "threshold_lab/thresholds.hpp"
#include "threshold_lab/verify.hpp"

namespace tlab {

namespace {

BigInt big(long long x) { return BigInt(static_cast<long>(x)); }

// q at which the host is exactly q-sparse (E_q X_I = 1 at the binding class)
Prob boundary_sparse(const Graph& h, long long n) {
    return p_expectation(h, n, Rational(1)).p;
}

// sup of the leading window: min over proper W ⊊ Y ⊊ Z of the mu-boundary of
// [Y,Z].  Empty optional when some proper Y has no rooted edges, in which
// case [W,Z] is p-leading for no p (mu_p(Y,Z) >= n^v/aut >= 1).
std::optional<Prob> leading_ceiling(const RootedGraph& r, long long n) {
    const std::vector<int> nr = r.nonroots();
    const int f = static_cast<int>(nr.size());
    Prob best = Prob::one();
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << f); ++mask) {
        std::vector<int> extra;
        for (int i = 0; i < f; ++i)
            if (mask >> i & 1) extra.push_back(nr[static_cast<std::size_t>(i)]);
        RootedGraph ry = grow_roots(r, extra);
        const unsigned e = static_cast<unsigned>(ry.rooted_edge_count());
        if (e == 0) return std::nullopt;
        Prob b = Prob::nth_root(
            make_rational(aut_count(ry), int_pow(big(n), static_cast<unsigned>(ry.nonroot_count()))),
            e);
        if (b.cmp(best).lt()) best = b;
    }
    return best;
}

// Exact rate r slightly below the leading ceiling but with the base graph
// still (r/2)-sparse; empty when that window is empty.
std::optional<Prob> pick_rate(const RootedGraph& r, long long n) {
    auto ceiling = leading_ceiling(r, n);
    if (!ceiling) return std::nullopt;
    const Prob floor_q = boundary_sparse(r.base(), n).scaled(Rational(2));
    for (long den : {2, 4, 16, 256}) {
        Prob cand = ceiling->scaled(Rational(den - 1, den));
        if (cand.cmp(floor_q).ge() && cand.cmp(*ceiling).lt() && cand.cmp(Prob::one()).le())
            return cand;
    }
    return std::nullopt;
}

// One row per instance: pass iff no applicable row failed; failing rows are
// carried along as advisory detail so the report stays readable.
void compact(VerifyReport& outer, const VerifyReport& inner, const std::string& label) {
    CheckRow row;
    row.label = label;
    row.applicable = inner.hypotheses_met;
    row.pass = inner.failed == 0;
    for (const auto& rr : inner.rows)
        if (rr.near_tie) row.near_tie = true;
    row.detail = std::to_string(inner.checked) + " checks, " + std::to_string(inner.failed) +
                 " violations, " + std::to_string(inner.advisories) + " advisory";
    const bool carry = inner.hypotheses_met && inner.failed > 0;
    outer.add(std::move(row));
    if (carry)
        for (const auto& rr : inner.rows)
            if (rr.applicable && !rr.pass) {
                CheckRow c = rr;
                c.label = label + ": " + c.label;
                c.applicable = false;
                c.detail = "violation: " + c.detail;
                outer.add(std::move(c));
            }
}

// first edge-preserving injection of the pattern into the host, if any
std::optional<std::vector<int>> first_embedding(const Graph& host, const Graph& pat) {
    std::vector<int> image(static_cast<std::size_t>(pat.vertex_count()), -1);
    std::vector<char> used(static_cast<std::size_t>(host.vertex_count()), 0);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == pat.vertex_count()) return true;
        for (int w = 0; w < host.vertex_count(); ++w) {
            if (used[static_cast<std::size_t>(w)]) continue;
            bool ok = true;
            for (int u : pat.neighbors(v))
                if (u < v && !host.has_edge(image[static_cast<std::size_t>(u)], w)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            image[static_cast<std::size_t>(v)] = w;
            used[static_cast<std::size_t>(w)] = 1;
            if (self(self, v + 1)) return true;
            used[static_cast<std::size_t>(w)] = 0;
        }
        return false;
    };
    if (rec(rec, 0)) return image;
    return std::nullopt;
}

// pendant star K_{1,5} on 0..5 plus random rear attachments; always a forest
Graph star_plus_forest(SplitMix64& rng) {
    Graph g = graphs::empty(16);
    for (int i = 1; i <= 5; ++i) g.add_edge(0, i);
    for (int v = 6; v < 16; ++v) {
        if (rng.unit() < 0.35) continue;
        g.add_edge(static_cast<int>(rng.next() % static_cast<std::uint64_t>(v)), v);
    }
    return g;
}

std::vector<int> top_degree_anchors(const Graph& h, int count, int rotate) {
    std::vector<int> order(static_cast<std::size_t>(h.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return h.degree(a) > h.degree(b); });
    std::vector<int> out;
    for (int i = 0; i < count; ++i)
        out.push_back(order[static_cast<std::size_t>((i + rotate) % h.vertex_count())]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    while (static_cast<int>(out.size()) < count)  // degenerate rotations
        for (int v = 0; v < h.vertex_count() && static_cast<int>(out.size()) < count; ++v)
            if (!std::binary_search(out.begin(), out.end(), v)) {
                out.push_back(v);
                std::sort(out.begin(), out.end());
            }
    return out;
}

}  // namespace

VerifyReport suite_small_claims(int max_z, std::vector<long long> ns) {
    VerifyReport rep;
    rep.suite = "small-claims";
    for (int z = 1; z <= max_z; ++z) {
        const std::vector<RootedGraph> classes = rooted_classes(z);
        for (long long n : ns) {
            long long instances = 0, skipped = 0, fails = 0;
            bool tie = false;
            for (const RootedGraph& r : classes) {
                if (r.nonroot_count() == 0) continue;
                for (long long p2 = 1; p2 <= n; p2 *= 2) {
                    Prob p = Prob::rational(make_rational(big(p2), big(n)));
                    try {
                        SmallClaimsReport sr = check_small_claims(r, n, p);
                        ++instances;
                        if (!sr.all_pass) ++fails;
                        if (sr.near_tie) tie = true;
                    } catch (const PreconditionUnmet&) {
                        ++skipped;
                    }
                }
            }
            CheckRow row;
            row.label = "z=" + std::to_string(z) + " n=" + std::to_string(n);
            row.pass = fails == 0;
            row.near_tie = tie;
            row.detail = std::to_string(instances) + " leading instances, " +
                         std::to_string(skipped) + " non-leading skipped, " +
                         std::to_string(fails) + " violations";
            rep.add(std::move(row));
        }
    }
    return rep;
}

VerifyReport suite_f_fixed(int instances, std::uint64_t seed) {
    VerifyReport rep;
    rep.suite = "F-fixed";
    const long long n = 64;

    std::vector<RootedGraph> pats;
    for (int z = 2; z <= 3; ++z)
        for (const RootedGraph& r : rooted_classes(z))
            if (r.nonroot_count() >= 1 && r.rooted_edge_count() >= 1) pats.push_back(r);

    {
        // five pendant edges at a star center
        Graph h = graphs::empty(16);
        for (int i = 1; i <= 5; ++i) h.add_edge(0, i);
        RootedGraph r = RootedGraph::on(graphs::path(2), {0});
        rep.absorb(verify_lemma_f_fixed(h, r, {0}, n, boundary_sparse(h, n)), "star ");
    }
    int skipped = 0;
    for (int i = 1; i < instances; ++i) {
        SplitMix64 rng(sample_stream_seed(seed, 21, static_cast<std::uint64_t>(i)));
        Graph h = random_forest(16, 16, 0.35, rng);
        if (h.edge_count() == 0) h.add_edge(0, 1);
        const RootedGraph& r = pats[static_cast<std::size_t>(i) % pats.size()];
        std::vector<int> x =
            top_degree_anchors(h, r.root_count(), static_cast<int>(rng.next() % 4));
        try {
            compact(rep, verify_lemma_f_fixed(h, r, x, n, boundary_sparse(h, n)),
                    "i" + std::to_string(i));
        } catch (const SearchBudgetExceeded&) {
            ++skipped;  // packing search too wide on this instance
        }
    }
    if (skipped > 0)
        rep.hypothesis_notes.push_back("note: " + std::to_string(skipped) +
                                       " instances skipped (packing search budget)");
    return rep;
}

VerifyReport suite_f_gen(int instances, std::uint64_t seed) {
    VerifyReport rep;
    rep.suite = "F-gen";
    const long long n = 64;

    {
        // pendant edges at a star center: every component is a single copy
        Graph h = graphs::empty(16);
        for (int i = 1; i <= 5; ++i) h.add_edge(0, i);
        RootedGraph r = RootedGraph::on(graphs::path(2), {0});
        rep.absorb(verify_lemma_f_gen(h, r, {0}, n, std::nullopt), "star ");
    }
    {
        // two pendant paths through one middle vertex share the root edge
        Graph h = graphs::empty(16);
        h.add_edge(0, 1);
        h.add_edge(1, 2);
        h.add_edge(1, 3);
        RootedGraph r = RootedGraph::on(graphs::path(3), {0});
        rep.absorb(verify_lemma_f_gen(h, r, {0}, n, std::nullopt), "spider ");
    }

    const std::vector<Graph> fs = tree_classes(2, 4);
    int emitted = 2;
    for (std::uint64_t hi = 0; emitted < instances && hi < static_cast<std::uint64_t>(instances);
         ++hi) {
        SplitMix64 rng(sample_stream_seed(seed, 22, hi));
        Graph h = star_plus_forest(rng);
        Prob q = boundary_sparse(h, n);

        const Graph* f = nullptr;
        for (std::size_t off = 0; off < fs.size(); ++off) {
            const Graph& cand = fs[(hi + off) % fs.size()];
            if (contains_copy(h, cand)) {
                f = &cand;
                break;
            }
        }
        if (!f) continue;
        auto emb = first_embedding(h, *f);
        if (!emb) continue;

        LeadingDecomposition dec;
        try {
            dec = leading_decomposition(*f, n, q, q);
        } catch (const Error&) {
            continue;
        }
        for (std::size_t si = 0; si < dec.steps.size() && emitted < instances; ++si) {
            std::vector<int> upper = dec.steps[si].upper, lower = dec.steps[si].lower;
            std::sort(upper.begin(), upper.end());
            std::sort(lower.begin(), lower.end());
            std::vector<int> roots, x;
            for (std::size_t j = 0; j < upper.size(); ++j)
                if (std::binary_search(lower.begin(), lower.end(), upper[j])) {
                    roots.push_back(static_cast<int>(j));
                    x.push_back((*emb)[static_cast<std::size_t>(upper[j])]);
                }
            RootedGraph r = RootedGraph::on(f->induced(upper), roots);
            compact(rep, verify_lemma_f_gen(h, r, x, n, q),
                    "h" + std::to_string(hi) + ".s" + std::to_string(si));
            ++emitted;
        }
    }
    return rep;
}

VerifyReport suite_tree_hard(int max_z, int max_copies, long long n) {
    VerifyReport rep;
    rep.suite = "tree-hard";
    double min_k = 0.0;
    int patterns = 0, skipped = 0;
    for (int z = 2; z <= max_z; ++z) {
        int idx = 0;
        for (const RootedGraph& r : rooted_classes(z)) {
            if (r.nonroot_count() < 2 || r.rooted_edge_count() < 1) continue;
            ++idx;
            auto rate = pick_rate(r, n);
            if (!rate) {
                ++skipped;
                continue;
            }
            WZTreeGen trees = generate_wz_trees(r, max_copies);
            VerifyReport inner = verify_lemma_tree_hard(r, r.base(), n, *rate, trees);
            ++patterns;
            for (const auto& m : inner.metrics)
                if (m.first == "conjecture_min_K") min_k = std::max(min_k, m.second);
            compact(rep, inner,
                    "z" + std::to_string(z) + "#" + std::to_string(idx) + " (" +
                        std::to_string(trees.trees.size()) + " trees)");
        }
    }
    rep.hypothesis_notes.push_back("patterns checked: " + std::to_string(patterns) +
                                   ", never-leading skipped: " + std::to_string(skipped));
    rep.metrics.emplace_back("conjecture_min_K", min_k);
    return rep;
}

VerifyReport suite_no_sunflower(int max_z, long long n) {
    VerifyReport rep;
    rep.suite = "no-sunflower";
    int patterns = 0, skipped = 0;
    for (int z = 2; z <= max_z; ++z) {
        int idx = 0;
        for (const RootedGraph& r : rooted_classes(z)) {
            if (r.nonroot_count() < 1 || r.rooted_edge_count() < 1) continue;
            ++idx;
            auto rate = pick_rate(r, n);
            if (!rate) {
                ++skipped;
                continue;
            }
            VerifyReport inner = verify_no_sunflower(r, r.base(), n, *rate);
            ++patterns;
            compact(rep, inner, "z" + std::to_string(z) + "#" + std::to_string(idx));
        }
    }
    rep.hypothesis_notes.push_back("patterns checked: " + std::to_string(patterns) +
                                   ", never-leading skipped: " + std::to_string(skipped));
    return rep;
}

VerifyReport suite_aut_bounds(int max_z, long long n) {
    VerifyReport rep;
    rep.suite = "aut-bounds";
    double max_c = 0.0;
    for (int z = 1; z <= max_z; ++z) {
        long inst = 0, app16 = 0, fail16 = 0, appve = 0, failve = 0;
        std::vector<CheckRow> bad;
        for (const RootedGraph& r : rooted_classes(z)) {
            Sunflower sf = max_sunflower(r);
            const int k_floor = [&] {
                int k = 1;
                while (int_pow(big(2), static_cast<unsigned>(k)) < int_pow(big(n), 4)) ++k;
                return k;
            }();
            const int k = std::max(sf.k + 1, k_floor);
            VerifyReport inner = verify_aut_bounds(r, k, n);
            ++inst;
            const CheckRow& r16 = inner.rows.at(0);
            const CheckRow& rve = inner.rows.at(1);
            if (r16.applicable) {
                ++app16;
                if (!r16.pass) ++fail16;
            }
            if (rve.applicable) {
                ++appve;
                if (!rve.pass) ++failve;
            }
            for (const CheckRow& rr : inner.rows)
                if (rr.applicable && !rr.pass) {
                    CheckRow c = rr;
                    c.label = "z" + std::to_string(z) + " violation: " + c.label;
                    c.applicable = false;
                    bad.push_back(std::move(c));
                }
            for (const auto& m : inner.metrics)
                if (m.first == "needed_c_at_k") max_c = std::max(max_c, m.second);
        }
        CheckRow row16;
        row16.label = "z=" + std::to_string(z) + ": aut <= (16k)^e";
        row16.pass = fail16 == 0;
        row16.detail = std::to_string(app16) + "/" + std::to_string(inst) + " applicable, " +
                       std::to_string(fail16) + " violations";
        rep.add(std::move(row16));
        CheckRow rowve;
        rowve.label = "z=" + std::to_string(z) + ": aut <= v^e";
        rowve.pass = failve == 0;
        rowve.detail = std::to_string(appve) + "/" + std::to_string(inst) + " applicable, " +
                       std::to_string(failve) + " violations";
        rep.add(std::move(rowve));
        for (auto& b : bad) rep.add(std::move(b));
    }
    rep.metrics.emplace_back("max_needed_c", max_c);
    return rep;
}

VerifyReport suite_nu(int instances, std::uint64_t seed) {
    VerifyReport rep;
    rep.suite = "nu";
    const long long n = 64;
    {
        Graph h = graphs::empty(16);
        for (int i = 1; i <= 5; ++i) h.add_edge(0, i);
        rep.absorb(verify_claim_nu(h, graphs::path(2), n, boundary_sparse(h, n)), "star ");
    }
    const std::vector<Graph> ts = tree_classes(2, 4);
    int skipped = 0;
    for (int i = 1; i < instances; ++i) {
        SplitMix64 rng(sample_stream_seed(seed, 23, static_cast<std::uint64_t>(i)));
        Graph h = random_forest(16, 16, 0.35, rng);
        if (h.edge_count() == 0) h.add_edge(0, 1);
        const Graph& t = ts[static_cast<std::size_t>(i) % ts.size()];
        try {
            compact(rep, verify_claim_nu(h, t, n, boundary_sparse(h, n)),
                    "i" + std::to_string(i));
        } catch (const SearchBudgetExceeded&) {
            ++skipped;
        }
    }
    if (skipped > 0)
        rep.hypothesis_notes.push_back("note: " + std::to_string(skipped) +
                                       " instances skipped (packing search budget)");
    return rep;
}

VerifyReport suite_cycles(long long n, const Rational& q, int t_cap) {
    return verify_cycle_exclusion(n, Prob::rational(q), t_cap, 20, 20260823);
}

VerifyReport suite_chain(int hosts, long long n, std::uint64_t seed) {
    VerifyReport rep;
    rep.suite = "chain";
    const std::vector<Graph> fs = connected_classes(2, 4);
    for (int i = 0; i < hosts; ++i) {
        SplitMix64 rng(sample_stream_seed(seed, 41, static_cast<std::uint64_t>(i)));
        Graph h = random_forest(static_cast<int>(n), 14, 0.3, rng);
        if (h.edge_count() == 0) h.add_edge(0, 1);
        Prob q = boundary_sparse(h, n);
        int used = 0;
        for (std::size_t fi = 0; fi < fs.size(); ++fi) {
            if (!contains_copy(h, fs[fi])) continue;  // N = 0: nothing to bound
            VerifyReport inner = verify_chain_bound(h, fs[fi], n, q);
            compact(rep, inner, "h" + std::to_string(i) + ".f" + std::to_string(fi));
            ++used;
        }
        if (used == 0) {
            CheckRow row;
            row.label = "h" + std::to_string(i);
            row.applicable = false;
            row.detail = "no connected pattern contained";
            rep.add(std::move(row));
        }
    }
    return rep;
}

VerifyReport suite_small_q(int hosts) {
    VerifyReport rep;
    rep.suite = "small-q";
    const long long n = 1000000;
    const Rational alpha(67667, 1000000);  // just below exp(-2)/2
    const Rational beta(1, 2);
    int made = 0;
    for (std::uint64_t i = 0; made < hosts && i < static_cast<std::uint64_t>(hosts) * 4; ++i) {
        SplitMix64 rng(sample_stream_seed(20260823, 31, i));
        // forest of paths and stars on at most 4 vertices, at most 13 edges
        Graph g = graphs::empty(20);
        int next = 0;
        while (true) {
            const int s = 2 + static_cast<int>(rng.next() % 3);
            if (next + s > g.vertex_count() || g.edge_count() + (s - 1) > 13) break;
            if (s >= 3 && (rng.next() & 1))
                for (int j = 1; j < s; ++j) g.add_edge(next, next + j);
            else
                for (int j = 1; j < s; ++j) g.add_edge(next + j - 1, next + j);
            next += s;
        }
        if (g.edge_count() == 0) g.add_edge(0, 1);
        VerifyReport one = verify_small_q_theorem(g, n, beta, alpha);
        if (!one.hypotheses_met) continue;  // not sparse at this q: try another draw
        compact(rep, one, "host " + std::to_string(made));
        ++made;
    }
    rep.note(made == hosts,
             "collected " + std::to_string(made) + "/" + std::to_string(hosts) + " sparse hosts");
    return rep;
}

VerifyReport suite_forest_count(int max_t) {
    VerifyReport rep;
    rep.suite = "forest-count";
    for (int t = 1; t <= max_t; ++t) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < t; ++u)
            for (int v = u + 1; v < t; ++v) pairs.emplace_back(u, v);
        std::vector<long long> cnt(static_cast<std::size_t>(t) + 1, 0);
        std::vector<int> parent(static_cast<std::size_t>(t));
        auto find = [&](int v) {
            while (parent[static_cast<std::size_t>(v)] != v) {
                parent[static_cast<std::size_t>(v)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
                v = parent[static_cast<std::size_t>(v)];
            }
            return v;
        };
        const std::uint32_t top = std::uint32_t{1} << pairs.size();
        for (std::uint32_t mask = 0; mask < top; ++mask) {
            std::iota(parent.begin(), parent.end(), 0);
            int comps = t;
            bool forest = true;
            for (std::size_t b = 0; b < pairs.size() && forest; ++b) {
                if (!(mask >> b & 1)) continue;
                int a = find(pairs[b].first), c = find(pairs[b].second);
                if (a == c)
                    forest = false;
                else {
                    parent[static_cast<std::size_t>(a)] = c;
                    --comps;
                }
            }
            if (!forest) continue;
            const int m = comps;
            // each component must hold exactly one of the roots 0..m-1
            std::vector<int> seen;
            bool ok = true;
            for (int v = 0; v < m && ok; ++v) {
                int rt = find(v);
                if (std::find(seen.begin(), seen.end(), rt) != seen.end())
                    ok = false;
                else
                    seen.push_back(rt);
            }
            if (ok && static_cast<int>(seen.size()) == m) ++cnt[static_cast<std::size_t>(m)];
        }
        for (int m = 1; m <= t; ++m) {
            CheckRow row;
            row.label = "t=" + std::to_string(t) + " m=" + std::to_string(m);
            row.pass = big(cnt[static_cast<std::size_t>(m)]) == forest_count(t, m);
            row.detail = "brute=" + std::to_string(cnt[static_cast<std::size_t>(m)]) +
                         " formula=" + to_string(forest_count(t, m));
            rep.add(std::move(row));
        }
    }
    return rep;
}

VerifyReport suite_connected_reduction(int hosts, std::uint64_t seed) {
    VerifyReport rep;
    rep.suite = "connected-reduction";
    const long long n = 4096;
    int made = 0;
    for (std::uint64_t i = 0; made < hosts && i < static_cast<std::uint64_t>(hosts) * 6; ++i) {
        SplitMix64 rng(sample_stream_seed(seed, 51, i));
        Graph g = graphs::empty(12);
        sample_gnp(g, 0.18, rng);
        if (g.edge_count() < 3 || g.edge_count() > 16) continue;

        // smallest p' with N(g,F) <= E_{p'} X_F for every connected class F
        Census census = subgraph_census(g, 16);
        Prob pp = Prob::zero();
        for (const auto& entry : census.entries) {
            if (!entry.rep.connected()) continue;
            Prob t = Prob::nth_root(
                make_rational(entry.aut * entry.copies,
                              falling_factorial(n, static_cast<unsigned>(entry.v))),
                static_cast<unsigned>(entry.e));
            if (t.cmp(pp).gt()) pp = t;
        }
        ConnReductionReport inner = verify_connected_reduction(g, n, pp, 16);
        CheckRow row;
        row.label = "host " + std::to_string(made) + " (e=" + std::to_string(g.edge_count()) + ")";
        row.applicable = inner.hypothesis_met;
        row.pass = inner.conclusion_ok && inner.isolate_identity_ok;
        row.detail = std::to_string(inner.entries.size()) + " classes, log2(p)=" +
                     [&] {
                         std::ostringstream os;
                         os.precision(6);
                         os << inner.p_log2;
                         return os.str();
                     }();
        rep.add(std::move(row));
        ++made;
    }
    rep.note(made == hosts, "collected " + std::to_string(made) + " hosts");
    return rep;
}

VerifyReport run_suite(const std::string& name) {
    if (name == "small-claims") return suite_small_claims();
    if (name == "f-fixed") return suite_f_fixed();
    if (name == "f-gen") return suite_f_gen();
    if (name == "tree-hard") return suite_tree_hard();
    if (name == "no-sunflower") return suite_no_sunflower();
    if (name == "aut-bounds") return suite_aut_bounds();
    if (name == "nu") return suite_nu();
    if (name == "cycles") return suite_cycles();
    if (name == "chain") return suite_chain();
    if (name == "small-q") return suite_small_q();
    if (name == "forest-count") return suite_forest_count();
    if (name == "connected-reduction") return suite_connected_reduction();
    throw UsageError(
        "unknown suite '" + name +
        "' (expected: small-claims, f-fixed, f-gen, tree-hard, no-sunflower, aut-bounds, nu, "
        "cycles, chain, small-q, forest-count, connected-reduction)");
}

}  // namespace tlab
