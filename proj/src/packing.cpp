#include "threshold_lab/packing.hpp"

#include <algorithm>

#include "threshold_lab/components.hpp"
#include "threshold_lab/errors.hpp"

namespace tlab {

namespace {

struct MisCtx {
    const std::vector<std::vector<int>>* adj;
    std::size_t budget;
    std::size_t nodes = 0;
    int best = 0;
};

void mis_rec(MisCtx& ctx, std::vector<char>& avail, int avail_count, int chosen) {
    if (++ctx.nodes > ctx.budget) throw SearchBudgetExceeded("independent-set search budget hit");
    if (chosen > ctx.best) ctx.best = chosen;
    if (chosen + avail_count <= ctx.best) return;

    const auto& adj = *ctx.adj;
    int pick = -1, pick_deg = -1;
    for (std::size_t v = 0; v < avail.size(); ++v) {
        if (!avail[v]) continue;
        int deg = 0;
        for (int u : adj[v])
            if (avail[static_cast<std::size_t>(u)]) ++deg;
        if (deg > pick_deg) {
            pick_deg = deg;
            pick = static_cast<int>(v);
        }
    }
    if (pick < 0) return;
    if (pick_deg == 0) {  // conflict-free remainder: take everything
        if (chosen + avail_count > ctx.best) ctx.best = chosen + avail_count;
        return;
    }

    // take pick
    std::vector<int> removed;
    avail[static_cast<std::size_t>(pick)] = 0;
    removed.push_back(pick);
    for (int u : adj[static_cast<std::size_t>(pick)])
        if (avail[static_cast<std::size_t>(u)]) {
            avail[static_cast<std::size_t>(u)] = 0;
            removed.push_back(u);
        }
    mis_rec(ctx, avail, avail_count - static_cast<int>(removed.size()), chosen + 1);
    for (std::size_t i = 1; i < removed.size(); ++i)
        avail[static_cast<std::size_t>(removed[i])] = 1;
    // skip pick (it stays removed: some neighbor will cover it)
    mis_rec(ctx, avail, avail_count - 1, chosen);
    avail[static_cast<std::size_t>(pick)] = 1;
}

bool share_vertex(const RootedCopy& a, const RootedCopy& b) {
    std::size_t i = 0, j = 0;
    while (i < a.vertices.size() && j < b.vertices.size()) {
        if (a.vertices[i] == b.vertices[j]) return true;
        a.vertices[i] < b.vertices[j] ? ++i : ++j;
    }
    return false;
}

bool share_edge(const RootedCopy& a, const RootedCopy& b) {
    std::size_t i = 0, j = 0;
    while (i < a.edges.size() && j < b.edges.size()) {
        if (a.edges[i] == b.edges[j]) return true;
        a.edges[i] < b.edges[j] ? ++i : ++j;
    }
    return false;
}

int disjoint_copies(const std::vector<RootedCopy>& copies, PackingMode mode, std::size_t budget) {
    std::vector<std::vector<int>> adj(copies.size());
    for (std::size_t i = 0; i < copies.size(); ++i)
        for (std::size_t j = i + 1; j < copies.size(); ++j) {
            bool clash = mode == PackingMode::VertexDisjoint ? share_vertex(copies[i], copies[j])
                                                             : share_edge(copies[i], copies[j]);
            if (clash) {
                adj[i].push_back(static_cast<int>(j));
                adj[j].push_back(static_cast<int>(i));
            }
        }
    return max_independent_set(adj, budget);
}

}  // namespace

int max_independent_set(const std::vector<std::vector<int>>& adj, std::size_t budget) {
    MisCtx ctx;
    ctx.adj = &adj;
    ctx.budget = budget;
    std::vector<char> avail(adj.size(), 1);
    mis_rec(ctx, avail, static_cast<int>(adj.size()), 0);
    return ctx.best;
}

int packing_number(const Graph& host, const Graph& pattern, PackingMode mode, std::size_t budget) {
    auto split = extract_components(host, RootedGraph(pattern, {}), {});
    return disjoint_copies(split.copies, mode, budget);
}

int rooted_packing_number(const Graph& host, const RootedGraph& r, const std::vector<int>& anchors,
                          PackingMode mode, std::size_t budget) {
    auto split = extract_components(host, r, anchors);
    return disjoint_copies(split.copies, mode, budget);
}

}  // namespace tlab
