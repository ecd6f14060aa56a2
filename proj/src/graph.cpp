#include "threshold_lab/graph.hpp"

#include <algorithm>
#include <bit>

namespace tlab {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64), m_(0) {
    if (n < 0) throw DomainError("negative vertex count");
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::vector<std::pair<int, int>>(edges));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw DomainError("vertex out of range");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw DomainError("self loop");
    if (has_edge(u, v)) return;
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ull << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ull << (u & 63);
    ++m_;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (!has_edge(u, v)) return;
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(1ull << (v & 63));
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(1ull << (u & 63));
    --m_;
}

void Graph::clear_edges() {
    std::fill(bits_.begin(), bits_.end(), 0);
    m_ = 0;
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) {
        std::uint64_t bits = r[w];
        while (bits) {
            int b = std::countr_zero(bits);
            out.push_back(w * 64 + b);
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(const std::vector<int>& verts) const {
    Graph g(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i) {
        check_vertex(verts[i]);
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (has_edge(verts[i], verts[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
    return g;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw DomainError("permutation size mismatch");
    Graph g(n_);
    for (auto [u, v] : edges()) g.add_edge(perm[u], perm[v]);
    return g;
}

Graph Graph::without_isolates(std::vector<int>* kept) const {
    std::vector<int> live;
    for (int v = 0; v < n_; ++v)
        if (degree(v) > 0) live.push_back(v);
    if (kept) *kept = live;
    return induced(live);
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    for (int s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (int u : neighbors(comp[head]))
                if (!seen[u]) {
                    seen[u] = 1;
                    comp.push_back(u);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool Graph::connected() const { return n_ <= 1 || components().size() == 1; }

bool Graph::acyclic() const {
    return m_ == n_ - static_cast<int>(components().size());
}

std::uint64_t Graph::fnv_hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<std::uint64_t>(n_));
    for (std::uint64_t w : bits_) mix(w);
    return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.vertex_count() + b.vertex_count());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    int off = a.vertex_count();
    for (auto [u, v] : b.edges()) g.add_edge(u + off, v + off);
    return g;
}

namespace graphs {

Graph empty(int n) { return Graph(n); }

Graph clique(int k) {
    Graph g(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
    return g;
}

Graph path(int k) {
    Graph g(k);
    for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle(int k) {
    if (k < 3) throw DomainError("cycle needs at least 3 vertices");
    Graph g = path(k);
    g.add_edge(k - 1, 0);
    return g;
}

Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph matching(int k) {
    Graph g(2 * k);
    for (int i = 0; i < k; ++i) g.add_edge(2 * i, 2 * i + 1);
    return g;
}

}  // namespace graphs

RootedGraph::RootedGraph(Graph base, std::vector<int> roots)
    : base_(std::move(base)), roots_(std::move(roots)) {
    std::vector<char> seen(static_cast<std::size_t>(base_.vertex_count()), 0);
    for (int r : roots_) {
        if (r < 0 || r >= base_.vertex_count()) throw DomainError("root out of range");
        if (seen[r]) throw DomainError("duplicate root");
        seen[r] = 1;
    }
    for (std::size_t i = 0; i < roots_.size(); ++i)
        for (std::size_t j = i + 1; j < roots_.size(); ++j)
            if (base_.has_edge(roots_[i], roots_[j]))
                throw DomainError("rooted graph may not contain root-internal edges");
}

RootedGraph RootedGraph::on(const Graph& ambient, std::vector<int> roots) {
    Graph base = ambient;
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j) base.remove_edge(roots[i], roots[j]);
    return RootedGraph(std::move(base), std::move(roots));
}

bool RootedGraph::is_root(int v) const {
    return std::find(roots_.begin(), roots_.end(), v) != roots_.end();
}

std::vector<int> RootedGraph::nonroots() const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (!is_root(v)) out.push_back(v);
    return out;
}

}  // namespace tlab
