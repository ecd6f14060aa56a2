#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "threshold_lab/errors.hpp"

namespace tlab {

// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6)] >>
                (v & 63)) &
               1u;
    }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void clear_edges();

    int degree(int v) const;
    const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }
    int words() const { return words_; }

    std::vector<int> neighbors(int v) const;
    std::vector<std::pair<int, int>> edges() const;  // sorted (u < v)

    bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

    // Subgraph induced by `verts`, relabeled to 0..k-1 in the given order.
    Graph induced(const std::vector<int>& verts) const;
    // Relabel: perm[old] = new.
    Graph relabeled(const std::vector<int>& perm) const;
    // Drop isolated vertices, preserving relative order of the rest.  If
    // `kept` is non-null it receives the original labels of the survivors.
    Graph without_isolates(std::vector<int>* kept = nullptr) const;

    std::vector<std::vector<int>> components() const;
    bool connected() const;
    bool acyclic() const;

    std::uint64_t fnv_hash() const;

  private:
    void check_vertex(int v) const;

    int n_ = 0;
    int words_ = 0;
    int m_ = 0;
    std::vector<std::uint64_t> bits_;
};

Graph disjoint_union(const Graph& a, const Graph& b);

namespace graphs {
Graph empty(int n);
Graph clique(int k);
Graph path(int k);      // k vertices, k-1 edges
Graph cycle(int k);     // k >= 3
Graph star(int leaves); // K_{1,leaves}: vertex 0 is the center
Graph matching(int k);  // k disjoint edges
}  // namespace graphs

// Rooted graph [W, Z]: an ordered root list W inside vertex set Z = 0..n-1,
// with only the rooted edges stored (every edge has at least one endpoint
// outside W; root-internal edges are not part of the object).
class RootedGraph {
  public:
    RootedGraph() = default;
    RootedGraph(Graph base, std::vector<int> roots);

    // Build from an ambient graph by marking `roots`: keeps all vertices,
    // drops root-internal edges.
    static RootedGraph on(const Graph& ambient, std::vector<int> roots);

    const Graph& base() const { return base_; }
    const std::vector<int>& roots() const { return roots_; }

    int vertex_count() const { return base_.vertex_count(); }
    int root_count() const { return static_cast<int>(roots_.size()); }
    int nonroot_count() const { return vertex_count() - root_count(); }
    int rooted_edge_count() const { return base_.edge_count(); }

    bool is_root(int v) const;
    std::vector<int> nonroots() const;

    bool operator==(const RootedGraph& o) const { return roots_ == o.roots_ && base_ == o.base_; }

  private:
    Graph base_;
    std::vector<int> roots_;
};

}  // namespace tlab
