#pragma once

#include <cstddef>
#include <vector>

#include "threshold_lab/graph.hpp"

namespace tlab {

enum class PackingMode { VertexDisjoint, EdgeDisjoint };

// Maximum number of pairwise disjoint copies of `pattern` inside `host`, by
// branch and bound over the conflict graph of the copies.  Throws
// SearchBudgetExceeded past `budget` search nodes.
int packing_number(const Graph& host, const Graph& pattern, PackingMode mode,
                   std::size_t budget = std::size_t{1} << 22);

// Same for copies of [B,A] on fixed anchors.
int rooted_packing_number(const Graph& host, const RootedGraph& r,
                          const std::vector<int>& anchors,
                          PackingMode mode = PackingMode::EdgeDisjoint,
                          std::size_t budget = std::size_t{1} << 22);

// Maximum independent set of a conflict graph (adjacency lists).
int max_independent_set(const std::vector<std::vector<int>>& adj, std::size_t budget);

}  // namespace tlab
