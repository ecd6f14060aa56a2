#pragma once

#include <vector>

#include "threshold_lab/graph.hpp"
#include "threshold_lab/sampling.hpp"

namespace tlab {

// All isomorphism classes of graphs on exactly n vertices, canonically
// labeled, sorted by (edge count, code).  Sizes 1, 2, 4, 11, 34, 156, 1044
// for n = 1..7.
std::vector<Graph> all_graph_classes(int n);

// Connected classes with min_v..max_v vertices, same order per size.
std::vector<Graph> connected_classes(int min_v, int max_v);

// Tree classes (connected, acyclic) with min_v..max_v vertices.
std::vector<Graph> tree_classes(int min_v, int max_v);

// All rooted-isomorphism classes [W,Z] over graphs with z_vertices vertices,
// one representative per class, every root-set size included.
std::vector<RootedGraph> rooted_classes(int z_vertices);

// Random forest on `ambient` vertices with edges among the first `verts`:
// each new vertex either starts a fresh piece (probability fresh) or attaches
// to a uniform earlier vertex.
Graph random_forest(int ambient, int verts, double fresh, SplitMix64& rng);

// Disjoint union of `edges` single edges and `cherries` paths P_3, laid out
// from vertex 0 upward inside an ambient vertex set.
Graph forest_of_pieces(int ambient, int edges, int cherries);

}  // namespace tlab
