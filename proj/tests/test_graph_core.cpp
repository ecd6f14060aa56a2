#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "threshold_lab/canonical.hpp"
#include "threshold_lab/census.hpp"
#include "threshold_lab/graph.hpp"
#include "threshold_lab/graph6.hpp"
#include "threshold_lab/sampling.hpp"

using namespace tlab;

namespace {

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);        // outer cycle
        g.add_edge(i, i + 5);              // spokes
        g.add_edge(i + 5, 5 + (i + 2) % 5);  // inner pentagram
    }
    return g;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    SplitMix64 rng(seed);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.unit() <= p) g.add_edge(i, j);
    return g;
}

std::vector<int> random_perm(int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng.next() % static_cast<std::uint64_t>(i + 1));
        std::swap(perm[i], perm[j]);
    }
    return perm;
}

}  // namespace

TEST_CASE("graph basics") {
    Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {3, 4}});
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(1, 0));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});
    CHECK(g.components().size() == 2);
    CHECK(!g.connected());
    CHECK(g.acyclic());
    g.add_edge(0, 2);
    CHECK(!g.acyclic());
    g.remove_edge(0, 2);
    CHECK(g.acyclic());

    Graph sub = g.induced({0, 1, 2});
    CHECK(sub.edge_count() == 2);
    Graph iso_free = Graph::from_edges(4, {{1, 2}}).without_isolates();
    CHECK(iso_free.vertex_count() == 2);
    CHECK(iso_free.edge_count() == 1);

    CHECK_THROWS_AS(g.add_edge(0, 0), DomainError);
    CHECK_THROWS_AS(g.add_edge(0, 9), DomainError);
}

TEST_CASE("builders") {
    CHECK(graphs::clique(4).edge_count() == 6);
    CHECK(graphs::path(4).edge_count() == 3);
    CHECK(graphs::cycle(5).edge_count() == 5);
    CHECK(graphs::star(3).edge_count() == 3);
    CHECK(graphs::star(3).degree(0) == 3);
    CHECK(graphs::matching(3).edge_count() == 3);
    CHECK(graphs::matching(3).vertex_count() == 6);
    CHECK(graphs::clique(1).edge_count() == 0);
    CHECK_THROWS_AS(graphs::cycle(2), DomainError);
    Graph u = disjoint_union(graphs::clique(3), graphs::path(2));
    CHECK(u.vertex_count() == 5);
    CHECK(u.edge_count() == 4);
}

TEST_CASE("rooted graph invariants") {
    Graph tri = graphs::clique(3);
    RootedGraph r = RootedGraph::on(tri, {0});
    CHECK(r.root_count() == 1);
    CHECK(r.nonroot_count() == 2);
    CHECK(r.rooted_edge_count() == 3);  // no root-internal edges to drop
    RootedGraph r2 = RootedGraph::on(tri, {0, 1});
    CHECK(r2.rooted_edge_count() == 2);  // edge 0-1 dropped
    CHECK_THROWS_AS(RootedGraph(tri, {0, 1}), DomainError);
    CHECK_THROWS_AS(RootedGraph(Graph(3), {0, 0}), DomainError);
    CHECK(r.nonroots() == std::vector<int>{1, 2});
}

TEST_CASE("graph6 known strings") {
    CHECK(write_graph6(graphs::clique(2)) == "A_");
    CHECK(write_graph6(graphs::clique(3)) == "Bw");
    CHECK(write_graph6(Graph(3)) == "B?");
    CHECK(write_graph6(graphs::path(3)) == "Bg");
    // "B_" is K_2 plus an isolated vertex.
    Graph b_ = parse_graph6("B_");
    CHECK(b_.vertex_count() == 3);
    CHECK(b_.edge_count() == 1);
    CHECK(b_.has_edge(0, 1));
    CHECK(parse_graph6(">>graph6<<A_").edge_count() == 1);
}

TEST_CASE("graph6 round trip") {
    for (int n = 0; n <= 12; ++n)
        for (int t = 0; t < 25; ++t) {
            Graph g = random_graph(n, 0.4, 1000 * n + t);
            Graph back = parse_graph6(write_graph6(g));
            CHECK(back == g);
        }
    // two-byte size field boundary
    Graph big(63);
    big.add_edge(0, 62);
    CHECK(parse_graph6(write_graph6(big)) == big);
}

TEST_CASE("graph6 malformed input") {
    CHECK_THROWS_AS(parse_graph6("B"), MalformedGraph6);         // truncated
    CHECK_THROWS_AS(parse_graph6("Bww"), MalformedGraph6);       // trailing bytes
    CHECK_THROWS_AS(parse_graph6("B\x1f"), MalformedGraph6);     // byte below range
    CHECK_THROWS_AS(parse_graph6("Bx"), MalformedGraph6);        // nonzero padding
    CHECK(parse_graph6("C~") == graphs::clique(4));              // no padding: all 6 bits used
    try {
        parse_graph6("B\x1f");
        CHECK(false);
    } catch (const MalformedGraph6& e) {
        CHECK(e.offset == 1);
    }
}

TEST_CASE("sparse6 decode") {
    // n = 7 with edges 0-1, 0-2, 1-2, 5-6
    Graph g = parse_sparse6(":Fa@x^");
    CHECK(g.vertex_count() == 7);
    CHECK(g.edge_count() == 4);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(5, 6));
    CHECK(parse_graph_line(":Fa@x^") == g);
    CHECK_THROWS_AS(parse_sparse6("Fa@x^"), MalformedGraph6);
}

TEST_CASE("canonical codes: invariance under relabeling") {
    for (int n = 2; n <= 8; ++n)
        for (int t = 0; t < 30; ++t) {
            Graph g = random_graph(n, 0.45, 77 * n + t);
            auto perm = random_perm(n, 991 * n + t);
            CHECK(canonical_form(g).code == canonical_form(g.relabeled(perm)).code);
        }
}

TEST_CASE("canonical codes: equality is exactly isomorphism (n <= 5)") {
    for (int n = 1; n <= 5; ++n) {
        auto graphs_n = oracle::all_labeled_graphs(n);
        // codes partition the labeled graphs; cross-check a sample of pairs
        std::map<std::string, Graph> reps;
        for (const auto& g : graphs_n) {
            auto code = canonical_form(g).code;
            auto [it, fresh] = reps.emplace(code, g);
            if (!fresh) CHECK(oracle::isomorphic(it->second, g));
        }
        for (auto it = reps.begin(); it != reps.end(); ++it)
            for (auto jt = std::next(it); jt != reps.end(); ++jt)
                CHECK(!oracle::isomorphic(it->second, jt->second));
    }
}

TEST_CASE("canonical labeling produces the coded graph") {
    for (int t = 0; t < 40; ++t) {
        Graph g = random_graph(7, 0.5, 5000 + t);
        auto canon = canonical_form(g);
        Graph relab = g.relabeled(canon.labeling);
        CHECK(canonical_form(relab).code == canon.code);
        CHECK(canonical_copy(g) == relab);
    }
}

TEST_CASE("isomorphism class counts for small n") {
    // numbers of simple graphs on n unlabeled vertices
    const long expected[] = {1, 2, 4, 11, 34, 156};
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> codes;
        for (const auto& g : oracle::all_labeled_graphs(n)) codes.insert(canonical_form(g).code);
        CHECK(static_cast<long>(codes.size()) == expected[n - 1]);
    }
}

TEST_CASE("aut counts vs permutation oracle (all graphs, n <= 5)") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : oracle::all_labeled_graphs(n))
            CHECK(aut_count(g) == BigInt(oracle::aut_count(g)));
}

TEST_CASE("aut counts on known graphs") {
    CHECK(aut_count(graphs::matching(2)) == 8);
    CHECK(aut_count(graphs::path(3)) == 2);
    CHECK(aut_count(graphs::clique(4)) == 24);
    CHECK(aut_count(graphs::cycle(5)) == 10);
    CHECK(aut_count(graphs::star(3)) == 6);
    CHECK(aut_count(petersen()) == 120);
    CHECK(aut_count(Graph(4)) == 24);  // E_4: full symmetric group
    CHECK(aut_count(random_graph(8, 0.5, 42)) == BigInt(oracle::aut_count(random_graph(8, 0.5, 42))));
}

TEST_CASE("rooted aut counts vs oracle") {
    // exhaustive over all graphs on <= 4 vertices and all root tuples in
    // ascending order
    for (int n = 1; n <= 4; ++n)
        for (const auto& g : oracle::all_labeled_graphs(n))
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                std::vector<int> roots;
                for (int v = 0; v < n; ++v)
                    if ((mask >> v) & 1) roots.push_back(v);
                RootedGraph r = RootedGraph::on(g, roots);
                CHECK(aut_count(r) == BigInt(oracle::rooted_aut_count(r)));
            }
    for (int t = 0; t < 25; ++t) {
        Graph g = random_graph(6, 0.5, 31337 + t);
        RootedGraph r = RootedGraph::on(g, {0, 3});
        CHECK(aut_count(r) == BigInt(oracle::rooted_aut_count(r)));
    }
}

TEST_CASE("rooted aut examples") {
    // triangle with one root: the two non-root vertices may swap
    CHECK(aut_count(RootedGraph::on(graphs::clique(3), {0})) == 2);
    // star rooted at the center: leaves permute freely
    CHECK(aut_count(RootedGraph::on(graphs::star(4), {0})) == 24);
    // star rooted at a leaf: remaining leaves permute
    CHECK(aut_count(RootedGraph::on(graphs::star(4), {1})) == 6);
    // every vertex rooted: trivial group
    CHECK(aut_count(RootedGraph::on(graphs::cycle(4), {0, 1, 2, 3})) == 1);
}

TEST_CASE("rooted isomorphism respects root order") {
    // 0 and 1 are roots; 1 carries an extra pendant, so swapping the root
    // order changes the rooted class.
    Graph g = Graph::from_edges(4, {{0, 2}, {1, 2}, {1, 3}});
    RootedGraph a(g, {0, 1});
    RootedGraph b(g, {1, 0});
    CHECK(!rooted_isomorphic(a, b));
    // but a relabeled copy with the roots listed consistently matches
    std::vector<int> perm{3, 1, 2, 0};  // 0 -> 3, 3 -> 0
    RootedGraph c(g.relabeled(perm), {3, 1});
    CHECK(rooted_isomorphic(a, c));
    // with symmetric attachments the root order does not matter
    RootedGraph s1(graphs::path(3), {0, 2});
    RootedGraph s2(graphs::path(3), {2, 0});
    CHECK(rooted_isomorphic(s1, s2));
}

TEST_CASE("aut element enumeration matches count") {
    for (int t = 0; t < 15; ++t) {
        Graph g = random_graph(6, 0.5, 999 + t);
        CHECK(BigInt(static_cast<long>(aut_elements(g).size())) == aut_count(g));
        RootedGraph r = RootedGraph::on(g, {1, 4});
        CHECK(BigInt(static_cast<long>(aut_elements(r).size())) == aut_count(r));
        for (const auto& perm : aut_elements(r)) {
            CHECK(perm[1] == 1);
            CHECK(perm[4] == 4);
            CHECK(oracle::perm_preserves(r.base(), perm));
        }
    }
}

TEST_CASE("census of K4") {
    Census census = subgraph_census(graphs::clique(4));
    CHECK(census.entries.size() == 10);
    std::map<std::pair<int, int>, BigInt> by_shape;  // (v, e) -> copies, unique shapes here
    BigInt total = 0;
    for (const auto& entry : census.entries) {
        by_shape[{entry.v, entry.e}] += entry.copies;
        total += entry.copies;
    }
    CHECK(total == 63);  // 2^6 - 1 edge subsets
    CHECK(by_shape[{2, 1}] == 6);    // K_2
    CHECK(by_shape[{3, 2}] == 12);   // paths
    CHECK(by_shape[{4, 2}] == 3);    // matchings
    CHECK(by_shape[{3, 3}] == 4);    // triangles
    CHECK(by_shape[{4, 3}] == 16);   // P_4 (12) + K_{1,3} (4)
    CHECK(by_shape[{4, 4}] == 15);   // C_4 (3) + triangle-with-pendant (12)
    CHECK(by_shape[{4, 5}] == 6);    // K_4 minus an edge
    CHECK(by_shape[{4, 6}] == 1);
    auto tri_code = canonical_form(graphs::clique(3)).code;
    const CensusEntry* tri = census.find(tri_code);
    REQUIRE(tri != nullptr);
    CHECK(tri->copies == 4);
    CHECK(tri->aut == 6);
}

TEST_CASE("census copies match direct counting") {
    Graph host = random_graph(7, 0.5, 2024);
    Census census = subgraph_census(host);
    CHECK(census.host_edges == host.edge_count());
    for (const auto& entry : census.entries) {
        CHECK(count_copies(host, entry.rep) == entry.copies);
        CHECK(BigInt(oracle::labeled_copies(host, entry.rep)) == entry.copies * entry.aut);
    }
}

TEST_CASE("census caps") {
    CHECK_THROWS_AS(subgraph_census(graphs::clique(8), 20), CensusTooLarge);
    CHECK_NOTHROW(subgraph_census(graphs::clique(6), 15));
}

TEST_CASE("census of the Petersen graph") {
    Census census = subgraph_census(petersen(), 20);
    const CensusEntry* c5 = census.find(canonical_form(graphs::cycle(5)).code);
    REQUIRE(c5 != nullptr);
    CHECK(c5->copies == 12);
    const CensusEntry* k2 = census.find(canonical_form(graphs::clique(2)).code);
    REQUIRE(k2 != nullptr);
    CHECK(k2->copies == 15);
    const CensusEntry* p3 = census.find(canonical_form(graphs::path(3)).code);
    REQUIRE(p3 != nullptr);
    CHECK(p3->copies == 30);
    CHECK(census.find(canonical_form(graphs::clique(3)).code) == nullptr);
}

TEST_CASE("labeled copy and containment checks") {
    CHECK(count_labeled_copies(graphs::clique(4), graphs::path(3)) == 24);
    CHECK(count_copies(graphs::clique(4), graphs::path(3)) == 12);
    CHECK(count_copies(graphs::cycle(6), graphs::clique(2)) == 6);
    CHECK(count_copies(petersen(), graphs::cycle(5)) == 12);
    CHECK(!contains_copy(graphs::cycle(6), graphs::clique(3)));
    CHECK(contains_copy(graphs::cycle(6), graphs::path(4)));
    CHECK(contains_copy(petersen(), graphs::cycle(5)));
    CHECK(!contains_copy(petersen(), graphs::clique(3)));
    // pattern with an isolated vertex: placement is free
    Graph pat = Graph::from_edges(3, {{0, 1}});
    CHECK(count_labeled_copies(graphs::clique(3), pat) == 6);
    for (int t = 0; t < 10; ++t) {
        Graph host = random_graph(7, 0.4, 555 + t);
        Graph pattern = random_graph(4, 0.5, 777 + t);
        CHECK(count_labeled_copies(host, pattern) == BigInt(oracle::labeled_copies(host, pattern)));
        CHECK(contains_copy(host, pattern) == (oracle::labeled_copies(host, pattern) > 0));
    }
}

TEST_CASE("extension counting") {
    // star rooted at its center, anchored anywhere in K_4
    RootedGraph star_c = RootedGraph::on(graphs::star(3), {0});
    ExtensionCount ext = count_extensions(star_c, graphs::clique(4), {2});
    CHECK(ext.labeled == 6);
    CHECK(ext.root_aut == 6);
    CHECK(ext.unlabeled == 1);
    // edge rooted at one end, anchored at a C_6 vertex
    RootedGraph pend = RootedGraph::on(graphs::path(2), {0});
    ExtensionCount ext2 = count_extensions(pend, graphs::cycle(6), {0});
    CHECK(ext2.labeled == 2);
    CHECK(ext2.unlabeled == 2);
    auto images = enumerate_extensions(pend, graphs::cycle(6), {0});
    CHECK(images.size() == 2);
    for (const auto& img : images) CHECK(img[0] == 0);
    CHECK_THROWS_AS(count_extensions(star_c, graphs::clique(4), {0, 1}), RootArityMismatch);
    CHECK_THROWS_AS(count_extensions(RootedGraph::on(graphs::path(3), {0, 2}),
                                     graphs::clique(4), {1, 1}),
                    DomainError);
}

TEST_CASE("extension counts against brute enumeration") {
    for (int t = 0; t < 12; ++t) {
        Graph host = random_graph(6, 0.5, 8100 + t);
        Graph shape = random_graph(4, 0.6, 9100 + t);
        RootedGraph r = RootedGraph::on(shape, {0, 1});
        ExtensionCount ext = count_extensions(r, host, {2, 4});
        long brute = 0;
        // all ordered pairs of distinct non-anchor vertices for nonroots {2,3}
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b) {
                if (a == b || a == 2 || a == 4 || b == 2 || b == 4) continue;
                std::vector<int> img{2, 4, a, b};
                bool ok = true;
                for (int u = 0; u < 4 && ok; ++u)
                    for (int v = u + 1; v < 4 && ok; ++v)
                        if (r.base().has_edge(u, v) && !host.has_edge(img[u], img[v])) ok = false;
                if (ok) ++brute;
            }
        CHECK(ext.labeled == brute);
    }
}
