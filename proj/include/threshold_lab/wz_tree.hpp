#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "threshold_lab/graph.hpp"
#include "threshold_lab/numbers.hpp"

namespace tlab {

// A [W,Z]-tree: copies T_0, T_1, ... of [W,Z], all rooted at the same W, each
// later copy sharing at least one but not all of its edges with the union of
// the earlier ones.  Stored with the roots relabeled to slots 0..|W|-1; the
// union graph carries exactly the union of the copy edges, so its edge count
// is e(W, V(T)).
struct WZTree {
    Graph union_graph;
    std::vector<int> roots;                        // 0..|W|-1
    std::vector<std::pair<int, int>> pattern_edges;
    std::vector<std::vector<int>> copy_maps;       // copy_maps[i][pattern vertex] = union vertex

    int copy_count() const { return static_cast<int>(copy_maps.size()); }
    int e_t() const { return union_graph.edge_count(); }
    RootedGraph rooted() const { return RootedGraph(union_graph, roots); }

    std::vector<int> copy_vertices(int i) const;     // Z_i, sorted
    std::vector<int> overlap_vertices(int i) const;  // Y_i = Z_i ∩ (Z_0 ∪ … ∪ Z_{i-1}), sorted
    Graph copy_graph(int i) const;                   // copy i's edges on the union vertex set
};

struct WZTreeGen {
    std::vector<WZTree> trees;  // deduplicated by canonical code of the rooted union
    bool truncated = false;     // hit max_union_vertices or max_trees
};

// All isomorphism classes of [W,Z]-trees with at most max_copies copies,
// grown by iterative gluing; each class keeps the first gluing history found.
// Requires at least two nonroots and one rooted edge.
WZTreeGen generate_wz_trees(const RootedGraph& r, int max_copies,
                            int max_union_vertices = 24, std::size_t max_trees = 200000);

// Labeled rooted forests on t vertices with m specified roots, one per
// component: m * t^(t-m-1).
BigInt forest_count(int t, int m);

}  // namespace tlab
