#pragma once

#include <array>
#include <vector>

#include "threshold_lab/graph.hpp"

namespace tlab {

// One copy of [B,A] on fixed anchors inside a host: its image vertex set and
// image edge set (labelings quotiented out).
struct RootedCopy {
    std::vector<int> vertices;              // sorted
    std::vector<std::array<int, 2>> edges;  // sorted pairs, u < v
};

// Maximal union of edge-sharing copies, i.e. one connected component of the
// "copies sharing an edge" graph; such unions are exactly the pieces that
// cannot be split as edge-disjoint unions of smaller ones.
struct CopyComponent {
    std::vector<int> copy_ids;  // indices into ComponentSplit::copies
    Graph graph;                // union of the member copies' edges
};

struct ComponentSplit {
    std::vector<RootedCopy> copies;
    std::vector<CopyComponent> components;
};

ComponentSplit extract_components(const Graph& host, const RootedGraph& r,
                                  const std::vector<int>& anchors);

}  // namespace tlab
