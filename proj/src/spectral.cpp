#include "specsat/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace specsat {

double CubicP::r1() { return (1.0 + std::sqrt(17.0)) / 2.0; }
double CubicP::r2() { return 1.0; }
double CubicP::r3() { return (1.0 - std::sqrt(17.0)) / 2.0; }

double rho_n4() { return CubicP::r1(); }

namespace {

constexpr long kMaxIterations = 1'000'000;

// One component, n >= 1. Iterates x <- (A + I) x; the Rayleigh quotient of
// the shifted matrix minus one estimates rho, and the certificate is the
// max-norm residual of the unshifted matrix.
SpectralResult power_iteration(const Graph& g, double tol) {
    const int n = g.n();
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> ax(n, 0.0);
    SpectralResult res;
    for (long it = 1; it <= kMaxIterations; ++it) {
        for (int v = 0; v < n; ++v) {
            double s = 0.0;
            for (VertexMask m = g.neighbors(v); m; m &= m - 1) s += x[std::countr_zero(m)];
            ax[v] = s;
        }
        double rayleigh = 0.0; // x' A x with |x| = 1
        for (int v = 0; v < n; ++v) rayleigh += x[v] * ax[v];
        double residual = 0.0;
        for (int v = 0; v < n; ++v) residual = std::max(residual, std::abs(ax[v] - rayleigh * x[v]));
        if (residual <= tol) {
            res.rho = rayleigh;
            res.residual = residual;
            res.iterations = it;
            res.perron = x;
            return res;
        }
        double norm = 0.0;
        for (int v = 0; v < n; ++v) {
            x[v] += ax[v]; // shifted step (A + I) x
            norm += x[v] * x[v];
        }
        norm = std::sqrt(norm);
        for (double& c : x) c /= norm;
    }
    throw std::runtime_error("power iteration did not converge within " +
                             std::to_string(kMaxIterations) + " iterations (n=" +
                             std::to_string(n) + ", tol=" + std::to_string(tol) + ")");
}

} // namespace

SpectralResult spectral_radius(const Graph& g, double tol) {
    if (g.n() == 0) throw std::invalid_argument("spectral radius of the empty graph is undefined");
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    if (g.is_connected()) return power_iteration(g, tol);
    SpectralResult best;
    best.rho = -1.0;
    long total = 0;
    for (const ComponentSplit& comp : components(g)) {
        SpectralResult r = power_iteration(comp.graph, tol);
        total += r.iterations;
        if (r.rho > best.rho) {
            best.rho = r.rho;
            best.residual = r.residual;
        }
    }
    best.iterations = total;
    best.perron.clear(); // only meaningful for connected input
    return best;
}

long long walk_row_sum_cubed(const Graph& g, int v) {
    const VertexMask nv = g.neighbors(v);
    const long long d = std::popcount(nv);
    long long total = d * d;
    VertexMask near = nv | g.second_neighbors(v);
    for (VertexMask m = near; m; m &= m - 1) {
        int w = std::countr_zero(m);
        total += static_cast<long long>(std::popcount(g.neighbors(w) & nv)) * g.degree(w);
    }
    return total;
}

std::vector<long long> polynomial_row_sums(const Graph& g) {
    std::vector<long long> out(g.n());
    for (int v = 0; v < g.n(); ++v) {
        long long s2 = 0; // row sum of A^2 = sum of neighbour degrees
        for (VertexMask m = g.neighbors(v); m; m &= m - 1) s2 += g.degree(std::countr_zero(m));
        out[v] = walk_row_sum_cubed(g, v) - 2 * s2 - 3 * g.degree(v) + 4;
    }
    return out;
}

CheckResult check_rowsum_sandwich(const Graph& g, double tol) {
    if (g.n() == 0) throw std::invalid_argument("empty graph");
    if (!g.is_connected()) throw std::invalid_argument("row-sum sandwich needs a connected graph");
    std::vector<long long> sums = polynomial_row_sums(g);
    long long lo = *std::min_element(sums.begin(), sums.end());
    long long hi = *std::max_element(sums.begin(), sums.end());
    double p = CubicP::eval(spectral_radius(g, tol / 100.0).rho);
    CheckResult res;
    if (lo == hi) {
        res.pass = std::abs(p - static_cast<double>(lo)) <= tol;
        res.detail = "equal row sums " + std::to_string(lo) + ", p(rho)=" + std::to_string(p);
    } else {
        res.pass = p > static_cast<double>(lo) + tol && p < static_cast<double>(hi) - tol;
        res.detail = "row sums in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                     "], p(rho)=" + std::to_string(p);
    }
    return res;
}

CheckResult check_subgraph_monotone(const Graph& g, const Graph& h,
                                    const std::vector<int>& embedding, double tol) {
    if (!g.is_connected()) throw std::invalid_argument("host graph must be connected");
    if (h.n() == 0) throw std::invalid_argument("subgraph must be nonempty");
    if (static_cast<int>(embedding.size()) != h.n())
        throw std::invalid_argument("embedding size must match subgraph order");
    VertexMask seen = 0;
    for (int img : embedding) {
        if (img < 0 || img >= g.n()) throw std::invalid_argument("embedding image out of range");
        VertexMask bit = VertexMask{1} << img;
        if (seen & bit) throw std::invalid_argument("embedding is not injective");
        seen |= bit;
    }
    for (auto [u, v] : h.edges())
        if (!g.adjacent(embedding[u], embedding[v]))
            throw std::invalid_argument("embedding does not preserve edge " + std::to_string(u) +
                                        "-" + std::to_string(v));
    if (h.n() == g.n() && h.edge_count() == g.edge_count())
        throw std::invalid_argument("subgraph is not proper");
    double rg = spectral_radius(g, tol / 100.0).rho;
    double rh = spectral_radius(h, tol / 100.0).rho;
    CheckResult res;
    res.pass = rg > rh + tol;
    res.detail = "rho(G)=" + std::to_string(rg) + ", rho(H)=" + std::to_string(rh);
    return res;
}

bool edge_on_internal_path(const Graph& g, int u, int v) {
    if (!g.adjacent(u, v)) throw std::invalid_argument("not an edge");
    // Walk from `from` away from `other` through degree-2 vertices until a
    // branching vertex appears; a pendant end or an all-degree-2 cycle fails.
    auto reaches_branch = [&g](int from, int other) {
        int prev = other, cur = from;
        VertexMask visited = 0;
        while (g.degree(cur) == 2) {
            VertexMask bit = VertexMask{1} << cur;
            if (visited & bit) return false;
            visited |= bit;
            VertexMask next = g.neighbors(cur) & ~(VertexMask{1} << prev);
            prev = cur;
            cur = std::countr_zero(next);
        }
        return g.degree(cur) >= 3;
    };
    return reaches_branch(u, v) && reaches_branch(v, u);
}

Graph subdivide_edge(const Graph& g, int u, int v) {
    if (!g.adjacent(u, v)) throw std::invalid_argument("not an edge");
    Graph mid(1);
    Graph out = g.without_edge(u, v).disjoint_union(mid);
    out = out.add_edge(u, g.n());
    return out.add_edge(g.n(), v);
}

CheckResult check_subdivision(const Graph& g, int u, int v, double tol) {
    if (!edge_on_internal_path(g, u, v))
        throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                    " does not lie on an internal path");
    double before = spectral_radius(g, tol / 100.0).rho;
    double after = spectral_radius(subdivide_edge(g, u, v), tol / 100.0).rho;
    CheckResult res;
    res.pass = after <= before + tol;
    res.detail = "rho=" + std::to_string(before) + " -> " + std::to_string(after);
    return res;
}

} // namespace specsat
