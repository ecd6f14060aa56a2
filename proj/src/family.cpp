#include "threshold_lab/family.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "threshold_lab/canonical.hpp"
#include "threshold_lab/errors.hpp"

namespace tlab {

std::vector<Graph> all_graph_classes(int n) {
    if (n < 0) throw DomainError("vertex count must be nonnegative");
    if (n > 10) throw SearchBudgetExceeded("class enumeration capped at 10 vertices");
    std::vector<Graph> cur{Graph(0)};
    for (int v = 1; v <= n; ++v) {
        std::map<CanonicalCode, Graph> next;
        for (const Graph& g : cur) {
            // extend by one vertex with every possible neighborhood
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (v - 1)); ++mask) {
                Graph h(v);
                for (auto [a, b] : g.edges()) h.add_edge(a, b);
                for (int u = 0; u < v - 1; ++u)
                    if (mask >> u & 1) h.add_edge(u, v - 1);
                auto canon = canonical_form(h);
                if (!next.count(canon.code)) next.emplace(canon.code, h.relabeled(canon.labeling));
            }
        }
        cur.clear();
        for (auto& [code, g] : next) cur.push_back(std::move(g));
    }
    std::stable_sort(cur.begin(), cur.end(),
                     [](const Graph& a, const Graph& b) { return a.edge_count() < b.edge_count(); });
    return cur;
}

std::vector<Graph> connected_classes(int min_v, int max_v) {
    std::vector<Graph> out;
    for (int v = min_v; v <= max_v; ++v)
        for (const Graph& g : all_graph_classes(v))
            if (g.vertex_count() > 0 && g.connected()) out.push_back(g);
    return out;
}

std::vector<Graph> tree_classes(int min_v, int max_v) {
    std::vector<Graph> out;
    for (int v = min_v; v <= max_v; ++v)
        for (const Graph& g : all_graph_classes(v))
            if (g.vertex_count() > 0 && g.connected() && g.acyclic()) out.push_back(g);
    return out;
}

std::vector<RootedGraph> rooted_classes(int z_vertices) {
    std::vector<RootedGraph> out;
    std::map<CanonicalCode, std::size_t> seen;
    for (const Graph& g : all_graph_classes(z_vertices)) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << z_vertices); ++mask) {
            std::vector<int> roots;
            for (int v = 0; v < z_vertices; ++v)
                if (mask >> v & 1) roots.push_back(v);
            RootedGraph r = RootedGraph::on(g, roots);
            CanonicalCode code = canonical_form(r).code;
            if (seen.emplace(code, out.size()).second) out.push_back(std::move(r));
        }
    }
    return out;
}

Graph random_forest(int ambient, int verts, double fresh, SplitMix64& rng) {
    if (verts > ambient) throw DomainError("support larger than ambient vertex set");
    Graph g(ambient);
    for (int v = 1; v < verts; ++v) {
        if (rng.unit() < fresh) continue;
        int u = static_cast<int>(rng.next() % static_cast<std::uint64_t>(v));
        g.add_edge(u, v);
    }
    return g;
}

Graph forest_of_pieces(int ambient, int edges, int cherries) {
    int need = 2 * edges + 3 * cherries;
    if (need > ambient) throw DomainError("pieces do not fit in the ambient vertex set");
    Graph g(ambient);
    int v = 0;
    for (int i = 0; i < edges; ++i, v += 2) g.add_edge(v, v + 1);
    for (int i = 0; i < cherries; ++i, v += 3) {
        g.add_edge(v, v + 1);
        g.add_edge(v + 1, v + 2);
    }
    return g;
}

}  // namespace tlab
