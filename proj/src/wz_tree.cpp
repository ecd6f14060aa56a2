#include "threshold_lab/wz_tree.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "threshold_lab/canonical.hpp"
#include "threshold_lab/errors.hpp"

namespace tlab {

std::vector<int> WZTree::copy_vertices(int i) const {
    std::vector<int> z = copy_maps[static_cast<std::size_t>(i)];
    std::sort(z.begin(), z.end());
    return z;
}

std::vector<int> WZTree::overlap_vertices(int i) const {
    std::vector<char> earlier(static_cast<std::size_t>(union_graph.vertex_count()), 0);
    for (int j = 0; j < i; ++j)
        for (int v : copy_maps[static_cast<std::size_t>(j)])
            earlier[static_cast<std::size_t>(v)] = 1;
    std::vector<int> y;
    for (int v : copy_vertices(i))
        if (earlier[static_cast<std::size_t>(v)]) y.push_back(v);
    return y;
}

Graph WZTree::copy_graph(int i) const {
    Graph g(union_graph.vertex_count());
    const auto& m = copy_maps[static_cast<std::size_t>(i)];
    for (auto [a, b] : pattern_edges)
        g.add_edge(m[static_cast<std::size_t>(a)], m[static_cast<std::size_t>(b)]);
    return g;
}

namespace {

struct GrowCtx {
    const Graph* pat;
    const std::vector<std::pair<int, int>>* pedges;
    int s = 0;   // root count
    int pv = 0;  // pattern vertices
    int max_union_vertices = 0;
    std::size_t max_trees = 0;
    WZTreeGen* out;
    std::set<CanonicalCode>* seen;
    bool full = false;
};

// Extend `cur` by one glued copy, assigning nonroot slots s..pv-1 to existing
// union vertices or (one candidate per call level) the next fresh slot.
void grow(GrowCtx& ctx, const WZTree& cur, std::vector<int>& psi, std::vector<char>& used, int k,
          int fresh_used) {
    if (ctx.full) return;
    const int nu = cur.union_graph.vertex_count();
    if (k == ctx.pv) {
        int shared = 0;
        for (auto [a, b] : *ctx.pedges) {
            int u = psi[static_cast<std::size_t>(a)], v = psi[static_cast<std::size_t>(b)];
            // fresh endpoints (>= nu) cannot lie on an existing edge
            if (u < nu && v < nu && cur.union_graph.has_edge(u, v)) ++shared;
        }
        if (shared == 0 || shared == static_cast<int>(ctx.pedges->size())) return;
        if (nu + fresh_used > ctx.max_union_vertices) {
            ctx.out->truncated = true;
            return;
        }
        WZTree next = cur;
        next.union_graph = Graph(nu + fresh_used);
        for (auto [u, v] : cur.union_graph.edges()) next.union_graph.add_edge(u, v);
        for (auto [a, b] : *ctx.pedges) {
            int u = psi[static_cast<std::size_t>(a)], v = psi[static_cast<std::size_t>(b)];
            if (!next.union_graph.has_edge(u, v)) next.union_graph.add_edge(u, v);
        }
        next.copy_maps.push_back(psi);
        CanonicalCode code = canonical_form(next.rooted()).code;
        if (!ctx.seen->insert(code).second) return;
        ctx.out->trees.push_back(std::move(next));
        if (ctx.out->trees.size() >= ctx.max_trees) {
            ctx.out->truncated = true;
            ctx.full = true;
        }
        return;
    }
    for (int u = ctx.s; u < nu; ++u) {
        if (used[static_cast<std::size_t>(u)]) continue;
        used[static_cast<std::size_t>(u)] = 1;
        psi[static_cast<std::size_t>(k)] = u;
        grow(ctx, cur, psi, used, k + 1, fresh_used);
        used[static_cast<std::size_t>(u)] = 0;
    }
    // fresh vertices enter in first-use order, so one candidate suffices
    int fresh = nu + fresh_used;
    psi[static_cast<std::size_t>(k)] = fresh;
    grow(ctx, cur, psi, used, k + 1, fresh_used + 1);
}

}  // namespace

WZTreeGen generate_wz_trees(const RootedGraph& r, int max_copies, int max_union_vertices,
                            std::size_t max_trees) {
    if (r.nonroot_count() < 2) throw DomainError("tree pattern needs at least two nonroots");
    if (r.rooted_edge_count() < 1) throw DomainError("tree pattern needs a rooted edge");
    if (max_copies < 1) throw DomainError("max_copies must be >= 1");

    const int s = r.root_count();
    const int pv = r.vertex_count();

    // roots -> slots 0..s-1 in root order, nonroots ascending after them
    std::vector<int> perm(static_cast<std::size_t>(pv), -1);
    for (int i = 0; i < s; ++i) perm[static_cast<std::size_t>(r.roots()[i])] = i;
    int next = s;
    for (int v = 0; v < pv; ++v)
        if (perm[static_cast<std::size_t>(v)] < 0) perm[static_cast<std::size_t>(v)] = next++;
    Graph pat = r.base().relabeled(perm);
    const std::vector<std::pair<int, int>> pedges = pat.edges();

    WZTreeGen out;
    std::set<CanonicalCode> seen;

    WZTree base;
    base.union_graph = pat;
    base.roots.resize(static_cast<std::size_t>(s));
    std::iota(base.roots.begin(), base.roots.end(), 0);
    base.pattern_edges = pedges;
    std::vector<int> ident(static_cast<std::size_t>(pv));
    std::iota(ident.begin(), ident.end(), 0);
    base.copy_maps.push_back(ident);
    seen.insert(canonical_form(base.rooted()).code);
    out.trees.push_back(base);

    GrowCtx ctx;
    ctx.pat = &pat;
    ctx.pedges = &pedges;
    ctx.s = s;
    ctx.pv = pv;
    ctx.max_union_vertices = max_union_vertices;
    ctx.max_trees = max_trees;
    ctx.out = &out;
    ctx.seen = &seen;

    std::size_t level_begin = 0, level_end = out.trees.size();
    for (int copies = 2; copies <= max_copies && !ctx.full; ++copies) {
        for (std::size_t ti = level_begin; ti < level_end && !ctx.full; ++ti) {
            WZTree cur = out.trees[ti];  // copy: out.trees may reallocate
            std::vector<int> psi(static_cast<std::size_t>(pv));
            std::iota(psi.begin(), psi.begin() + s, 0);
            std::vector<char> used(
                static_cast<std::size_t>(cur.union_graph.vertex_count() + pv - s), 0);
            grow(ctx, cur, psi, used, s, 0);
        }
        level_begin = level_end;
        level_end = out.trees.size();
        if (level_begin == level_end) break;
    }
    return out;
}

BigInt forest_count(int t, int m) {
    if (m < 1 || t < m) throw DomainError("forest_count needs 1 <= m <= t");
    if (m == t) return 1;
    return BigInt(m) * int_pow(BigInt(t), static_cast<unsigned long>(t - m - 1));
}

}  // namespace tlab
