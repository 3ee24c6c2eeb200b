#pragma once

#include "specsat/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace specsat {

// p(x) = x^3 - 2x^2 - 3x + 4 = (x - 1)(x^2 - x - 4); its largest root is the
// spectral radius of N4.
struct CubicP {
    static constexpr double a3 = 1.0, a2 = -2.0, a1 = -3.0, a0 = 4.0;
    static double eval(double x) { return ((x + a2) * x + a1) * x + a0; }
    static double r1(); // (1 + sqrt 17) / 2
    static double r2(); // 1
    static double r3(); // (1 - sqrt 17) / 2
};

double rho_n4(); // = CubicP::r1()

struct SpectralResult {
    double rho = 0.0;
    double residual = 0.0;         // max-norm of A x - rho x for the returned vector
    long iterations = 0;
    std::vector<double> perron;    // unit Perron vector; empty for disconnected input
};

// Power iteration on A + I (the shift separates the -rho eigenvalue of
// bipartite graphs), all-ones start, residual-certified. Disconnected graphs
// take the maximum over components. Throws on n = 0 and on non-convergence.
SpectralResult spectral_radius(const Graph& g, double tol = 1e-10);

// Row sum of A^3 at vertex v, counted combinatorially:
// d(v)^2 + sum over w at distance <= 2 of |N(w) cap N(v)| * d(w).
long long walk_row_sum_cubed(const Graph& g, int v);

// Exact per-vertex row sums of p(A).
std::vector<long long> polynomial_row_sums(const Graph& g);

struct CheckResult {
    bool applicable = true;
    bool pass = false;
    std::string detail;
};

// min_v s_v(p(A)) <= p(rho) <= max_v s_v(p(A)), strict when the row sums are
// not all equal. Requires a connected graph.
CheckResult check_rowsum_sandwich(const Graph& g, double tol);

// rho(G) > rho(H) for a proper subgraph H of connected G. embedding[i] is the
// vertex of g hosting vertex i of h.
CheckResult check_subgraph_monotone(const Graph& g, const Graph& h,
                                    const std::vector<int>& embedding, double tol);

// Subdividing an edge on an internal path cannot increase the radius.
CheckResult check_subdivision(const Graph& g, int u, int v, double tol);

bool edge_on_internal_path(const Graph& g, int u, int v);
Graph subdivide_edge(const Graph& g, int u, int v);

} // namespace specsat
