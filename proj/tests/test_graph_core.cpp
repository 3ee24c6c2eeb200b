#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "specsat/canonical.hpp"
#include "specsat/constructions.hpp"
#include "specsat/errors.hpp"
#include "specsat/graph.hpp"
#include "specsat/graph_io.hpp"
#include "specsat/rng.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

using namespace specsat;

namespace {

Graph relabel_random(const Graph& g, Rng& rng) {
    std::vector<int> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = g.n() - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    return g.relabeled(perm);
}

} // namespace

TEST_CASE("construction validates edges") {
    CHECK_THROWS_AS(Graph(65), CapExceeded);
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 5}}), std::out_of_range);
    Graph g(4, {{0, 1}, {2, 3}});
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
}

TEST_CASE("add_edge returns a new value") {
    Graph two_k2(4, {{0, 1}, {2, 3}});
    Graph p4 = two_k2.add_edge(1, 2);
    CHECK(two_k2.edge_count() == 2); // input untouched
    CHECK(are_isomorphic(p4, Graph::path(4)));
    CHECK(are_isomorphic(Graph::path(3).add_edge(0, 2), Graph::complete(3)));
    CHECK_THROWS_AS(Graph::complete(3).add_edge(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(Graph::complete(3).add_edge(1, 1), std::invalid_argument);
}

TEST_CASE("degree sums and neighbourhoods") {
    Rng rng(11);
    for (int k = 0; k < 50; ++k) {
        Graph g = random_graph(rng, 1 + rng.below(12), rng.unit());
        int sum = 0;
        for (int v = 0; v < g.n(); ++v) sum += g.degree(v);
        CHECK(sum == 2 * g.edge_count());
        for (int v = 0; v < g.n(); ++v)
            CHECK(std::popcount(g.neighbors(v)) == g.degree(v));
    }
}

TEST_CASE("decompose on the named examples") {
    SUBCASE("star centre has empty second neighbourhood") {
        NeighborhoodDecomposition d = decompose(Graph::star(3), 0);
        CHECK(mask_vertices(d.a).size() == 3);
        CHECK(d.b == 0);
        CHECK(d.c == 0);
        CHECK(d.e_a == 0);
        CHECK(d.e_ab == 0);
        CHECK(d.e_b == 0);
        CHECK(d.e_bc == 0);
    }
    SUBCASE("N4 leaf") {
        Graph n4 = build_n4(); // leaf 6 hangs off support 3
        NeighborhoodDecomposition d = decompose(n4, 6);
        CHECK(mask_vertices(d.a) == std::vector<int>{3});
        CHECK(mask_vertices(d.b) == std::vector<int>{0, 7}); // triangle vertex and twin leaf
        CHECK(d.e_b == 0);
        CHECK(d.e_bc == 2);
    }
    SUBCASE("five-cycle") {
        NeighborhoodDecomposition d = decompose(Graph::cycle(5), 0);
        CHECK(mask_vertices(d.a).size() == 2);
        CHECK(mask_vertices(d.b).size() == 2);
        CHECK(d.c == 0);
        CHECK(d.e_a == 0);
        CHECK(d.e_ab == 2);
        CHECK(d.e_b == 1);
        CHECK(d.e_bc == 0);
    }
    CHECK_THROWS_AS(decompose(Graph(3), 7), std::out_of_range);
}

TEST_CASE("decompose edge counts against a double loop") {
    Rng rng(23);
    for (int k = 0; k < 100; ++k) {
        Graph g = random_graph(rng, 2 + rng.below(11), rng.unit());
        int v = rng.below(g.n());
        NeighborhoodDecomposition d = decompose(g, v);
        int e_ab = 0;
        for (int b : mask_vertices(d.b))
            for (int a : mask_vertices(d.a))
                if (g.adjacent(a, b)) ++e_ab;
        CHECK(d.e_ab == e_ab);
        CHECK(std::popcount(d.a) == g.degree(v));
        VertexMask everything = d.a | d.b | d.c | (VertexMask{1} << v);
        CHECK(everything == g.vertex_mask());
        CHECK((d.a & d.b) == 0);
        CHECK((d.a & d.c) == 0);
        CHECK((d.b & d.c) == 0);
    }
}

TEST_CASE("components partition the graph into connected parts") {
    SUBCASE("two K2") {
        auto comps = components(Graph(4, {{0, 1}, {2, 3}}));
        REQUIRE(comps.size() == 2);
        CHECK(comps[0].graph.n() == 2);
        CHECK(comps[1].graph.n() == 2);
    }
    SUBCASE("N4 plus triangle") {
        auto comps = components(build_n4().disjoint_union(Graph::complete(3)));
        REQUIRE(comps.size() == 2);
        std::multiset<int> orders{comps[0].graph.n(), comps[1].graph.n()};
        CHECK(orders == std::multiset<int>{3, 12});
    }
    SUBCASE("empty graph") { CHECK(components(Graph(0)).empty()); }
    SUBCASE("vertex maps compose to the identity embedding") {
        Rng rng(37);
        for (int k = 0; k < 50; ++k) {
            Graph g = random_graph(rng, 1 + rng.below(14), 0.25);
            auto comps = components(g);
            std::set<int> seen;
            for (const ComponentSplit& c : comps) {
                CHECK(c.graph.is_connected());
                for (size_t i = 0; i < c.vertices.size(); ++i) {
                    CHECK(seen.insert(c.vertices[i]).second);
                    for (size_t j = i + 1; j < c.vertices.size(); ++j)
                        CHECK(c.graph.adjacent(static_cast<int>(i), static_cast<int>(j)) ==
                              g.adjacent(c.vertices[i], c.vertices[j]));
                }
            }
            CHECK(static_cast<int>(seen.size()) == g.n());
        }
    }
}

TEST_CASE("canonical: relabeling invariance and discrimination") {
    CHECK(canonical(Graph::path(4)) ==
          canonical(Graph(4, {{3, 1}, {1, 0}, {0, 2}}))); // P4 as 3-1-0-2
    CHECK(canonical(Graph::star(3)).code != canonical(Graph::path(4)).code);

    Rng rng(41);
    std::vector<Graph> samples;
    for (int k = 0; k < 12; ++k) samples.push_back(random_graph(rng, 2 + rng.below(10), rng.unit()));
    samples.push_back(build_n4());
    samples.push_back(catalog_entry("F17").graph);
    for (const Graph& g : samples) {
        CanonicalForm base = canonical(g);
        for (int k = 0; k < 100; ++k) CHECK(canonical(relabel_random(g, rng)) == base);
    }
}

TEST_CASE("canonical codes count 11 classes on 4 vertices") {
    std::set<std::string> codes;
    for (int mask = 0; mask < 64; ++mask) {
        Graph g(4);
        int bit = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j, ++bit)
                if (mask & (1 << bit)) g = g.add_edge(i, j);
        codes.insert(canonical(g).code);
    }
    CHECK(codes.size() == 11);
}

TEST_CASE("canonical separates exactly the isomorphism classes (n <= 6)") {
    for (int n = 1; n <= 6; ++n) {
        std::map<std::string, Graph> reps; // our canonical code -> representative
        std::set<std::string> brute_codes; // oracle canonical forms
        const int pairs = n * (n - 1) / 2;
        for (long mask = 0; mask < (1L << pairs); ++mask) {
            Graph g(n);
            int bit = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++bit)
                    if (mask & (1L << bit)) g = g.add_edge(i, j);
            auto [it, fresh] = reps.emplace(canonical(g).code, g);
            if (!fresh && mask % 7 == 0) CHECK(oracle::isomorphic(g, it->second));
            if (n <= 5) brute_codes.insert(oracle::brute_canonical(g));
        }
        if (n <= 5) CHECK(reps.size() == brute_codes.size());
        // distinct codes must be non-isomorphic (oracle check where feasible)
        std::vector<Graph> distinct;
        for (auto& [code, g] : reps) distinct.push_back(g);
        for (size_t i = 0; i < distinct.size(); ++i)
            for (size_t j = i + 1; j < distinct.size(); ++j)
                if (distinct[i].degree_sequence() == distinct[j].degree_sequence())
                    CHECK_FALSE(oracle::isomorphic(distinct[i], distinct[j]));
    }
}

TEST_CASE("graph6 round trip") {
    Rng rng(53);
    for (int k = 0; k < 200; ++k) {
        Graph g = random_graph(rng, rng.below(20), rng.unit());
        Graph back = from_graph6(to_graph6(g));
        CHECK(back == g);
    }
    // the 62-vertex boundary round-trips; 63 is over the format cap
    Graph big(62);
    big = big.add_edge(0, 61);
    CHECK(from_graph6(to_graph6(big)) == big);
    CHECK_THROWS_AS(to_graph6(Graph(63)), CapExceeded);
    CHECK_THROWS_AS(from_graph6(""), ParseError);
    CHECK_THROWS_AS(from_graph6("G"), ParseError); // truncated 8-vertex line
    // reference encodings produced by the standard tools
    CHECK(to_graph6(Graph::path(4)) == "Ch");
    CHECK(to_graph6(Graph::star(3)) == "Cs");
    CHECK(to_graph6(Graph::cycle(5)) == "Dhc");
    CHECK(to_graph6(build_n4()) == "K{O___GA?G?_");
}

TEST_CASE("json edge list round trip") {
    Rng rng(59);
    for (int k = 0; k < 50; ++k) {
        Graph g = random_graph(rng, rng.below(15), rng.unit());
        CHECK(graph_from_json(graph_to_json(g)) == g);
    }
    CHECK_THROWS_AS(graph_from_json("{"), ParseError);
    CHECK_THROWS_AS(graph_from_json("{\"n\": 2}"), ParseError);
    Graph g = graph_from_json("{\"n\": 3, \"edges\": [[0,1],[1,2]]}");
    CHECK(are_isomorphic(g, Graph::path(3)));
}

TEST_CASE("induced subgraphs and deletion") {
    Graph n4 = build_n4();
    Graph minus = n4.delete_vertex(6);
    CHECK(minus.n() == 11);
    CHECK(minus.edge_count() == 11);
    Graph tri = n4.induced(0b111);
    CHECK(are_isomorphic(tri, Graph::complete(3)));
}
