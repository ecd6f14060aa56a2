#pragma once

#include <vector>

#include "threshold_lab/graph.hpp"

namespace tlab {

// k-sunflower in [W,Z]: disjoint nonempty petal sets P_1..P_k inside Z\W with
// no edges between distinct petals, such that the rooted graphs
// [Z \ ∪P_j, P_i] are pairwise isomorphic under the fixed ascending ordering
// of Z \ ∪P_j.  The petals then share an external neighborhood (the core).
struct Sunflower {
    int k = 0;
    bool exact = true;                     // false past the search cap (then a lower bound)
    std::vector<std::vector<int>> petals;  // sorted vertex lists, one per petal
    std::vector<int> core;                 // N(P_1) \ P_1
};

// Largest k over all petal systems.  Exact search enumerates unions
// S ⊆ Z\W and splits the components of the graph induced on S by attachment
// type (max k for a given S is the gcd of the type multiplicities).  Past
// max_free nonroots, falls back to grouping the components of Z\W by rooted
// isomorphism type over W and returning the largest class, which is itself a
// valid sunflower.  W = Z admits no petal system at all: k = 0.
Sunflower max_sunflower(const RootedGraph& r, int max_free = 12);

}  // namespace tlab
