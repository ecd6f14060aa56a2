#pragma once

#include <cstddef>
#include <vector>

#include "threshold_lab/canonical.hpp"
#include "threshold_lab/graph.hpp"
#include "threshold_lab/numbers.hpp"

namespace tlab {

// One isomorphism class of (isolate-free) subgraphs of a host, with its copy
// count N(host, rep) and |Aut(rep)|.  `rep` is canonically labeled.
struct CensusEntry {
    Graph rep;
    CanonicalCode code;
    int v = 0;
    int e = 0;
    BigInt copies;
    BigInt aut;
};

struct Census {
    int host_vertices = 0;
    int host_edges = 0;
    std::vector<CensusEntry> entries;  // sorted by (e, v, code)

    const CensusEntry* find(const CanonicalCode& code) const;
};

// Exhaustive scan over nonempty edge subsets of the host.  Throws
// CensusTooLarge when the host has more than `max_edges` edges.
Census subgraph_census(const Graph& host, int max_edges = 20, int jobs = 0);
Census subgraph_census_serial(const Graph& host, int max_edges = 20);

// Edge-preserving injections (labeled copies) and their unlabeled count.
BigInt count_labeled_copies(const Graph& host, const Graph& pattern);
BigInt count_copies(const Graph& host, const Graph& pattern);

// Reusable existence tester; the pattern-side search order is precomputed.
class SubgraphTester {
  public:
    explicit SubgraphTester(Graph pattern);
    const Graph& pattern() const { return pattern_; }
    bool contains(const Graph& host) const;

  private:
    Graph pattern_;
    std::vector<int> order_;    // pattern vertices in search order
    std::vector<int> degree_;   // pattern degrees by order position
    std::vector<std::vector<int>> back_;  // neighbors among earlier positions
};

bool contains_copy(const Graph& host, const Graph& pattern);

// Extensions of a rooted graph over fixed anchor vertices in a host: maps of
// the non-roots extending roots -> anchors, preserving rooted edges.
struct ExtensionCount {
    BigInt labeled;
    BigInt unlabeled;  // labeled / |Aut(rooted)|
    BigInt root_aut;
};

ExtensionCount count_extensions(const RootedGraph& r, const Graph& host,
                                const std::vector<int>& anchors);
// Each element maps rooted-graph vertex -> host vertex (roots to anchors).
std::vector<std::vector<int>> enumerate_extensions(const RootedGraph& r, const Graph& host,
                                                   const std::vector<int>& anchors,
                                                   std::size_t cap = 1 << 22);

}  // namespace tlab
