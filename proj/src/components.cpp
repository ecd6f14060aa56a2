#include "threshold_lab/components.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "threshold_lab/canonical.hpp"
#include "threshold_lab/census.hpp"
#include "threshold_lab/errors.hpp"

namespace tlab {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]); }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

}  // namespace

ComponentSplit extract_components(const Graph& host, const RootedGraph& r,
                                  const std::vector<int>& anchors) {
    ComponentSplit out;
    const auto embeds = enumerate_extensions(r, host, anchors);
    const auto pedges = r.base().edges();

    std::set<std::pair<std::vector<int>, std::vector<std::array<int, 2>>>> dedup;
    for (const auto& m : embeds) {
        std::vector<int> verts = m;
        std::sort(verts.begin(), verts.end());
        std::vector<std::array<int, 2>> es;
        es.reserve(pedges.size());
        for (auto [a, b] : pedges) {
            int u = m[static_cast<std::size_t>(a)], v = m[static_cast<std::size_t>(b)];
            if (u > v) std::swap(u, v);
            es.push_back({u, v});
        }
        std::sort(es.begin(), es.end());
        dedup.insert({std::move(verts), std::move(es)});
    }
    for (const auto& [vs, es] : dedup) out.copies.push_back({vs, es});

    // each embedding class has exactly |Aut(B,A)| labelings
    if (BigInt(static_cast<long>(out.copies.size())) * aut_count(r) !=
        BigInt(static_cast<long>(embeds.size())))
        throw Error("copy/labeling accounting mismatch");

    Dsu dsu(out.copies.size());
    std::map<std::array<int, 2>, int> owner;
    for (std::size_t i = 0; i < out.copies.size(); ++i)
        for (const auto& e : out.copies[i].edges) {
            auto [it, fresh] = owner.try_emplace(e, static_cast<int>(i));
            if (!fresh) dsu.unite(it->second, static_cast<int>(i));
        }

    std::map<int, std::vector<int>> groups;
    for (std::size_t i = 0; i < out.copies.size(); ++i)
        groups[dsu.find(static_cast<int>(i))].push_back(static_cast<int>(i));
    for (auto& [root, ids] : groups) {
        CopyComponent comp;
        comp.copy_ids = ids;
        comp.graph = Graph(host.vertex_count());
        for (int id : ids)
            for (const auto& e : out.copies[static_cast<std::size_t>(id)].edges)
                if (!comp.graph.has_edge(e[0], e[1])) comp.graph.add_edge(e[0], e[1]);
        out.components.push_back(std::move(comp));
    }
    return out;
}

}  // namespace tlab
