#pragma once

#include <string>
#include <vector>

#include "threshold_lab/graph.hpp"
#include "threshold_lab/numbers.hpp"

namespace tlab {

// Canonical code: an opaque byte string; two (rooted) graphs are isomorphic
// iff their codes are equal.  Rooted isomorphism fixes the root list
// pointwise in order.
using CanonicalCode = std::string;

struct CanonResult {
    CanonicalCode code;
    std::vector<int> labeling;  // labeling[old vertex] = canonical position
};

// Color-refinement + individualization search.  Capped at 64 vertices
// (throws SearchBudgetExceeded beyond).
CanonResult canonical_form(const Graph& g);
CanonResult canonical_form(const RootedGraph& r);

// Graph with each vertex relabeled to its canonical position.
Graph canonical_copy(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);
bool rooted_isomorphic(const RootedGraph& a, const RootedGraph& b);

// |Aut|, via orbit-stabilizer recursion over canonical codes; memoized per
// process.  For rooted graphs the roots are fixed pointwise.
BigInt aut_count(const Graph& g);
BigInt aut_count(const RootedGraph& r);

// Explicit automorphism list (each entry maps vertex -> vertex).  Throws
// SearchBudgetExceeded if the group is larger than `cap`.
std::vector<std::vector<int>> aut_elements(const Graph& g, std::size_t cap = 1 << 20);
std::vector<std::vector<int>> aut_elements(const RootedGraph& r, std::size_t cap = 1 << 20);

std::string code_hex(const CanonicalCode& code);

}  // namespace tlab
