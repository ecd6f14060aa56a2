#include "threshold_lab/census.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <map>
#include <tuple>

namespace tlab {

namespace {

// Isolate-free graph spanned by the given edges of the host; vertices are
// relabeled by ascending host label.
Graph span_of_edges(const std::vector<std::pair<int, int>>& edges, std::uint32_t mask,
                    std::vector<int>& scratch_map, std::vector<int>& scratch_verts) {
    scratch_verts.clear();
    for (std::uint32_t m = mask; m; m &= m - 1) {
        int idx = std::countr_zero(m);
        scratch_verts.push_back(edges[idx].first);
        scratch_verts.push_back(edges[idx].second);
    }
    std::sort(scratch_verts.begin(), scratch_verts.end());
    scratch_verts.erase(std::unique(scratch_verts.begin(), scratch_verts.end()),
                        scratch_verts.end());
    for (std::size_t i = 0; i < scratch_verts.size(); ++i) scratch_map[scratch_verts[i]] = i;
    Graph g(static_cast<int>(scratch_verts.size()));
    for (std::uint32_t m = mask; m; m &= m - 1) {
        int idx = std::countr_zero(m);
        g.add_edge(scratch_map[edges[idx].first], scratch_map[edges[idx].second]);
    }
    return g;
}

struct ClassAccum {
    Graph rep;  // canonically labeled
    BigInt copies;
};

using ClassMap = std::map<CanonicalCode, ClassAccum>;

void scan_range(const std::vector<std::pair<int, int>>& edges, int host_n, std::uint32_t lo,
                std::uint32_t hi, ClassMap& out) {
    std::vector<int> scratch_map(static_cast<std::size_t>(host_n), -1);
    std::vector<int> scratch_verts;
    for (std::uint32_t mask = lo; mask < hi; ++mask) {
        if (mask == 0) continue;
        Graph sub = span_of_edges(edges, mask, scratch_map, scratch_verts);
        CanonResult canon = canonical_form(sub);
        auto it = out.find(canon.code);
        if (it == out.end())
            out.emplace(canon.code, ClassAccum{sub.relabeled(canon.labeling), BigInt(1)});
        else
            it->second.copies += 1;
    }
}

Census finish(const Graph& host, ClassMap&& classes) {
    Census census;
    census.host_vertices = host.vertex_count();
    census.host_edges = host.edge_count();
    for (auto& [code, acc] : classes) {
        CensusEntry entry;
        entry.rep = std::move(acc.rep);
        entry.code = code;
        entry.v = entry.rep.vertex_count();
        entry.e = entry.rep.edge_count();
        entry.copies = std::move(acc.copies);
        entry.aut = aut_count(entry.rep);
        census.entries.push_back(std::move(entry));
    }
    std::sort(census.entries.begin(), census.entries.end(),
              [](const CensusEntry& a, const CensusEntry& b) {
                  return std::tie(a.e, a.v, a.code) < std::tie(b.e, b.v, b.code);
              });
    return census;
}

}  // namespace

const CensusEntry* Census::find(const CanonicalCode& code) const {
    for (const auto& e : entries)
        if (e.code == code) return &e;
    return nullptr;
}

Census subgraph_census_serial(const Graph& host, int max_edges) {
    int m = host.edge_count();
    if (m > max_edges) throw CensusTooLarge(m, max_edges);
    auto edges = host.edges();
    ClassMap classes;
    scan_range(edges, host.vertex_count(), 1, 1u << m, classes);
    return finish(host, std::move(classes));
}

Census subgraph_census(const Graph& host, int max_edges, int jobs) {
    int m = host.edge_count();
    if (m > max_edges) throw CensusTooLarge(m, max_edges);
    if (m <= 12) return subgraph_census_serial(host, max_edges);
    auto edges = host.edges();
    int threads = jobs > 0 ? jobs : omp_get_max_threads();
    std::vector<ClassMap> partial(static_cast<std::size_t>(threads));
    std::uint64_t total = 1ull << m;
#pragma omp parallel num_threads(threads)
    {
        int t = omp_get_thread_num();
        std::uint64_t chunk = (total + threads - 1) / threads;
        std::uint64_t lo = std::min<std::uint64_t>(total, chunk * t);
        std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
        if (lo < hi)
            scan_range(edges, host.vertex_count(), static_cast<std::uint32_t>(lo),
                       static_cast<std::uint32_t>(hi), partial[t]);
    }
    ClassMap classes = std::move(partial[0]);
    for (int t = 1; t < threads; ++t)
        for (auto& [code, acc] : partial[t]) {
            auto it = classes.find(code);
            if (it == classes.end())
                classes.emplace(code, std::move(acc));
            else
                it->second.copies += acc.copies;
        }
    return finish(host, std::move(classes));
}

namespace {

// Pattern-side search order: a vertex of maximum degree first, then always a
// vertex with the most already-placed neighbors (ties by degree, then label).
std::vector<int> embed_order(const Graph& pattern) {
    int k = pattern.vertex_count();
    std::vector<int> order;
    std::vector<char> placed(static_cast<std::size_t>(k), 0);
    for (int step = 0; step < k; ++step) {
        int best = -1, best_back = -1, best_deg = -1;
        for (int v = 0; v < k; ++v) {
            if (placed[v]) continue;
            int back = 0;
            for (int u : pattern.neighbors(v))
                if (placed[u]) ++back;
            int deg = pattern.degree(v);
            if (back > best_back || (back == best_back && deg > best_deg)) {
                best = v;
                best_back = back;
                best_deg = deg;
            }
        }
        order.push_back(best);
        placed[best] = 1;
    }
    return order;
}

// Backtracking embedding count; early_exit stops after the first hit.
BigInt embed_count(const Graph& host, const Graph& pattern, const std::vector<int>& order,
                   bool early_exit) {
    int k = pattern.vertex_count();
    int n = host.vertex_count();
    if (k == 0) return 1;
    if (k > n) return 0;
    std::vector<int> pos(static_cast<std::size_t>(k), -1);  // pattern vertex -> order position
    for (int i = 0; i < k; ++i) pos[order[i]] = i;
    std::vector<std::vector<int>> back(static_cast<std::size_t>(k));
    std::vector<int> pdeg(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        int v = order[i];
        pdeg[i] = pattern.degree(v);
        for (int u : pattern.neighbors(v))
            if (pos[u] < i) back[i].push_back(pos[u]);
    }
    std::vector<int> image(static_cast<std::size_t>(k), -1);  // order position -> host vertex
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    BigInt hits = 0;

    auto rec = [&](auto&& self, int i) -> bool {
        if (i == k) {
            hits += 1;
            return early_exit;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || host.degree(w) < pdeg[i]) continue;
            bool ok = true;
            for (int b : back[i])
                if (!host.has_edge(image[b], w)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            image[i] = w;
            used[w] = 1;
            bool stop = self(self, i + 1);
            used[w] = 0;
            image[i] = -1;
            if (stop) return true;
        }
        return false;
    };
    rec(rec, 0);
    return hits;
}

}  // namespace

BigInt count_labeled_copies(const Graph& host, const Graph& pattern) {
    return embed_count(host, pattern, embed_order(pattern), false);
}

BigInt count_copies(const Graph& host, const Graph& pattern) {
    BigInt labeled = count_labeled_copies(host, pattern);
    BigInt aut = aut_count(pattern);
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), labeled.get_mpz_t(), aut.get_mpz_t());
    if (r != 0) throw Error("internal: labeled copy count not divisible by |Aut|");
    return q;
}

SubgraphTester::SubgraphTester(Graph pattern) : pattern_(std::move(pattern)) {
    order_ = embed_order(pattern_);
    int k = pattern_.vertex_count();
    std::vector<int> pos(static_cast<std::size_t>(k), -1);
    for (int i = 0; i < k; ++i) pos[order_[i]] = i;
    degree_.resize(static_cast<std::size_t>(k));
    back_.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        degree_[i] = pattern_.degree(order_[i]);
        for (int u : pattern_.neighbors(order_[i]))
            if (pos[u] < i) back_[i].push_back(pos[u]);
    }
}

bool SubgraphTester::contains(const Graph& host) const {
    int k = pattern_.vertex_count();
    int n = host.vertex_count();
    if (k > n) return false;
    if (k == 0) return true;
    thread_local std::vector<int> image;
    thread_local std::vector<char> used;
    image.assign(static_cast<std::size_t>(k), -1);
    used.assign(static_cast<std::size_t>(n), 0);

    auto rec = [&](auto&& self, int i) -> bool {
        if (i == k) return true;
        for (int w = 0; w < n; ++w) {
            if (used[w] || host.degree(w) < degree_[i]) continue;
            bool ok = true;
            for (int b : back_[i])
                if (!host.has_edge(image[b], w)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            image[i] = w;
            used[w] = 1;
            if (self(self, i + 1)) return true;
            used[w] = 0;
        }
        return false;
    };
    return rec(rec, 0);
}

bool contains_copy(const Graph& host, const Graph& pattern) {
    return SubgraphTester(pattern).contains(host);
}

namespace {

void extension_search(const RootedGraph& r, const Graph& host, const std::vector<int>& anchors,
                      std::size_t cap, BigInt& count, std::vector<std::vector<int>>* out) {
    int nr = r.vertex_count();
    int s = r.root_count();
    if (static_cast<int>(anchors.size()) != s)
        throw RootArityMismatch("expected " + std::to_string(s) + " anchors, got " +
                                std::to_string(anchors.size()));
    std::vector<int> image(static_cast<std::size_t>(nr), -1);
    std::vector<char> used(static_cast<std::size_t>(host.vertex_count()), 0);
    for (int i = 0; i < s; ++i) {
        int a = anchors[i];
        if (a < 0 || a >= host.vertex_count()) throw DomainError("anchor out of range");
        if (used[a]) throw DomainError("duplicate anchor");
        image[r.roots()[i]] = a;
        used[a] = 1;
    }
    std::vector<int> free_verts = r.nonroots();
    // order free vertices by connection to placed prefix
    std::vector<int> order;
    std::vector<char> placed(static_cast<std::size_t>(nr), 0);
    for (int root : r.roots()) placed[root] = 1;
    while (order.size() < free_verts.size()) {
        int best = -1, best_back = -1, best_deg = -1;
        for (int v : free_verts) {
            if (placed[v]) continue;
            int back = 0;
            for (int u : r.base().neighbors(v))
                if (placed[u]) ++back;
            int deg = r.base().degree(v);
            if (back > best_back || (back == best_back && deg > best_deg)) {
                best = v;
                best_back = back;
                best_deg = deg;
            }
        }
        order.push_back(best);
        placed[best] = 1;
    }

    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == order.size()) {
            count += 1;
            if (out) {
                out->push_back(image);
                if (out->size() > cap) throw SearchBudgetExceeded("extension enumeration cap hit");
            }
            return;
        }
        int v = order[i];
        for (int w = 0; w < host.vertex_count(); ++w) {
            if (used[w]) continue;
            bool ok = true;
            for (int u : r.base().neighbors(v)) {
                if (image[u] >= 0 && !host.has_edge(image[u], w)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[v] = w;
            used[w] = 1;
            self(self, i + 1);
            used[w] = 0;
            image[v] = -1;
        }
    };
    rec(rec, 0);
}

}  // namespace

ExtensionCount count_extensions(const RootedGraph& r, const Graph& host,
                                const std::vector<int>& anchors) {
    BigInt labeled = 0;
    extension_search(r, host, anchors, 0, labeled, nullptr);
    BigInt aut = aut_count(r);
    BigInt q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), labeled.get_mpz_t(), aut.get_mpz_t());
    if (rem != 0) throw Error("internal: extension count not divisible by rooted |Aut|");
    return {labeled, q, aut};
}

std::vector<std::vector<int>> enumerate_extensions(const RootedGraph& r, const Graph& host,
                                                   const std::vector<int>& anchors,
                                                   std::size_t cap) {
    std::vector<std::vector<int>> out;
    BigInt count = 0;
    extension_search(r, host, anchors, cap, count, &out);
    return out;
}

}  // namespace tlab
