#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "specsat/constructions.hpp"
#include "specsat/graph.hpp"
#include "specsat/rng.hpp"
#include "specsat/spectral.hpp"

#include "oracles.hpp"

#include <cmath>

using namespace specsat;

TEST_CASE("cubic p and its roots") {
    // p(x) = (x - 1)(x^2 - x - 4), expanded coefficients exactly
    CHECK(CubicP::a3 == 1.0);
    CHECK(CubicP::a2 == -2.0);
    CHECK(CubicP::a1 == -3.0);
    CHECK(CubicP::a0 == 4.0);
    CHECK(CubicP::eval(CubicP::r2()) == 0.0);
    CHECK(std::abs(CubicP::eval(CubicP::r1())) < 1e-12);
    CHECK(std::abs(CubicP::eval(CubicP::r3())) < 1e-12);
    CHECK(CubicP::r1() == doctest::Approx((1 + std::sqrt(17.0)) / 2).epsilon(1e-15));
    CHECK(CubicP::r1() * CubicP::r2() * CubicP::r3() == doctest::Approx(-4.0).epsilon(1e-14));
    CHECK(rho_n4() == CubicP::r1());
}

TEST_CASE("spectral radius golden values") {
    CHECK(spectral_radius(Graph::complete(2), 1e-10).rho == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(spectral_radius(build_n4(), 1e-11).rho == doctest::Approx(rho_n4()).epsilon(1e-10));
    CHECK(spectral_radius(catalog_entry("F3").graph, 1e-10).rho ==
          doctest::Approx(2.68133).epsilon(1e-4));
    CHECK(spectral_radius(Graph::star(6), 1e-10).rho ==
          doctest::Approx(std::sqrt(6.0)).epsilon(1e-10));
    for (int k = 2; k <= 8; ++k) {
        CHECK(std::abs(spectral_radius(Graph::complete(k), 1e-10).rho - (k - 1)) < 1e-9);
        CHECK(std::abs(spectral_radius(Graph::star(k), 1e-10).rho - std::sqrt(double(k))) < 1e-9);
    }
}

TEST_CASE("spectral result carries a certified residual and Perron vector") {
    SpectralResult r = spectral_radius(build_n4(), 1e-10);
    CHECK(r.residual <= 1e-10);
    CHECK(r.iterations > 0);
    REQUIRE(r.perron.size() == 12);
    for (double x : r.perron) CHECK(x > 0.0); // connected: strictly positive
    SpectralResult d = spectral_radius(Graph(5, {{0, 1}, {2, 3}}), 1e-10);
    CHECK(d.perron.empty()); // disconnected input
    CHECK(d.rho == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("errors: empty graph, bad tolerance") {
    CHECK_THROWS_AS(spectral_radius(Graph(0), 1e-10), std::invalid_argument);
    CHECK_THROWS_AS(spectral_radius(Graph(2), -1.0), std::invalid_argument);
}

TEST_CASE("agrees with the Jacobi oracle on random graphs") {
    Rng rng(101);
    for (int k = 0; k < 150; ++k) {
        Graph g = random_graph(rng, 1 + rng.below(13), rng.unit());
        double claimed = g.edge_count() == 0 ? 0.0 : spectral_radius(g, 1e-10).rho;
        CHECK(claimed == doctest::Approx(oracle::jacobi_spectral_radius(g)).epsilon(1e-8));
    }
}

TEST_CASE("walk counts of length three") {
    Graph k3 = Graph::complete(3);
    CHECK(walk_row_sum_cubed(k3, 0) == 8);
    CHECK(walk_row_sum_cubed(Graph::complete(2), 1) == 1);
    CHECK(walk_row_sum_cubed(Graph::path(3), 1) == 4); // centre of P3
    CHECK_THROWS_AS(walk_row_sum_cubed(k3, 5), std::out_of_range);

    Rng rng(103);
    for (int k = 0; k < 300; ++k) {
        Graph g = random_graph(rng, 1 + rng.below(12), rng.unit());
        std::vector<long long> expect = oracle::cube_row_sums(g);
        for (int v = 0; v < g.n(); ++v) CHECK(walk_row_sum_cubed(g, v) == expect[v]);
    }
}

TEST_CASE("polynomial row sums, exact integers") {
    CHECK(polynomial_row_sums(Graph::complete(2)) == std::vector<long long>{0, 0});
    CHECK(polynomial_row_sums(Graph::complete(3)) == std::vector<long long>{-2, -2, -2});
    for (long long s : polynomial_row_sums(build_n4())) CHECK(s == 0);

    Rng rng(107);
    for (int k = 0; k < 200; ++k) {
        Graph g = random_graph(rng, 1 + rng.below(12), rng.unit());
        CHECK(polynomial_row_sums(g) == oracle::p_row_sums(g));
    }
}

TEST_CASE("row-sum sandwich (lemma on p(rho))") {
    SUBCASE("regular graph: equality branch") {
        // all K3 row sums are -2 and p(2) = -2
        CheckResult r = check_rowsum_sandwich(Graph::complete(3), 1e-8);
        CHECK(r.pass);
    }
    SUBCASE("path of three: strict branch") {
        CheckResult r = check_rowsum_sandwich(Graph::path(3), 1e-8);
        CHECK(r.pass);
    }
    SUBCASE("N4: row sums zero and p(rho) = 0") {
        CheckResult r = check_rowsum_sandwich(build_n4(), 1e-8);
        CHECK(r.pass);
    }
    CHECK_THROWS_AS(check_rowsum_sandwich(Graph(4, {{0, 1}, {2, 3}}), 1e-8), std::invalid_argument);
}

TEST_CASE("component maximum") {
    Rng rng(109);
    for (int k = 0; k < 100; ++k) {
        Graph g1 = random_graph(rng, 1 + rng.below(9), rng.unit());
        Graph g2 = random_graph(rng, 1 + rng.below(9), rng.unit());
        Graph u = g1.disjoint_union(g2);
        if (u.edge_count() == 0) continue;
        double lhs = spectral_radius(u, 1e-10).rho;
        double a = g1.edge_count() ? spectral_radius(g1, 1e-10).rho : 0.0;
        double b = g2.edge_count() ? spectral_radius(g2, 1e-10).rho : 0.0;
        CHECK(lhs == doctest::Approx(std::max(a, b)).epsilon(1e-9));
    }
}

TEST_CASE("strict monotonicity under proper subgraphs") {
    std::vector<int> id3{0, 1, 2};
    CHECK(check_subgraph_monotone(Graph::complete(3), Graph::path(3), id3, 1e-8).pass);

    Graph n4 = build_n4();
    // 6-3-0-1 is a P4 inside N4
    CHECK(check_subgraph_monotone(n4, Graph::path(4), {6, 3, 0, 1}, 1e-8).pass);

    Graph f3 = catalog_entry("F3").graph;
    Graph f3_minus = f3.delete_vertex(6); // drop one pendant leaf
    std::vector<int> emb{0, 1, 2, 3, 4, 5};
    CHECK(check_subgraph_monotone(f3, f3_minus, emb, 1e-8).pass);

    CHECK_THROWS_AS(check_subgraph_monotone(Graph::complete(3), Graph::complete(3), id3, 1e-8),
                    std::invalid_argument); // not proper
    CHECK_THROWS_AS(check_subgraph_monotone(Graph::complete(3), Graph::path(3),
                                            std::vector<int>{0, 0, 1}, 1e-8),
                    std::invalid_argument); // not injective
    CHECK_THROWS_AS(check_subgraph_monotone(Graph::path(4), Graph::complete(3),
                                            std::vector<int>{0, 1, 2}, 1e-8),
                    std::invalid_argument); // edge not preserved
}

TEST_CASE("internal paths and subdivision") {
    Graph f13 = catalog_entry("F13").graph;
    CHECK(edge_on_internal_path(f13, 0, 1)); // both endpoints branch
    CHECK(check_subdivision(f13, 0, 1, 1e-8).pass);

    // theta graph: two degree-3 hubs joined by three 2-paths
    Graph theta(5, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}});
    CHECK(edge_on_internal_path(theta, 0, 2));
    CHECK(check_subdivision(theta, 0, 2, 1e-8).pass);

    CHECK_FALSE(edge_on_internal_path(Graph::star(4), 0, 1)); // pendant edge
    CHECK_THROWS_AS(check_subdivision(Graph::star(4), 0, 1, 1e-8), std::invalid_argument);
    CHECK_FALSE(edge_on_internal_path(Graph::cycle(5), 0, 1)); // no branch vertex at all

    // bowtie: the triangle edges away from the hub lie on an internal cycle
    Graph f2 = catalog_entry("F2").graph;
    CHECK(edge_on_internal_path(f2, 1, 2));
    CHECK(check_subdivision(f2, 1, 2, 1e-8).pass);

    Graph sub = subdivide_edge(Graph::path(3), 0, 1);
    CHECK(are_isomorphic(sub, Graph::path(4)));
}
