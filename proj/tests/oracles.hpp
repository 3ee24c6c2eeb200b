// Test-side oracles, deliberately independent of the library's
// implementations: plain integer matrices, permutation search, a Jacobi
// eigensolver and a tuple-enumeration packing search.
#pragma once

#include "specsat/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace oracle {

using specsat::Graph;

using Matrix = std::vector<std::vector<long long>>;

inline Matrix adjacency(const Graph& g) {
    Matrix a(g.n(), std::vector<long long>(g.n(), 0));
    for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
    return a;
}

inline Matrix multiply(const Matrix& x, const Matrix& y) {
    const size_t n = x.size();
    Matrix out(n, std::vector<long long>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (!x[i][k]) continue;
            for (size_t j = 0; j < n; ++j) out[i][j] += x[i][k] * y[k][j];
        }
    return out;
}

inline std::vector<long long> cube_row_sums(const Graph& g) {
    Matrix a = adjacency(g);
    Matrix a3 = multiply(multiply(a, a), a);
    std::vector<long long> out(g.n(), 0);
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j) out[i] += a3[i][j];
    return out;
}

inline std::vector<long long> p_row_sums(const Graph& g) {
    Matrix a = adjacency(g);
    Matrix a2 = multiply(a, a);
    Matrix a3 = multiply(a2, a);
    std::vector<long long> out(g.n(), 0);
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j)
            out[i] += a3[i][j] - 2 * a2[i][j] - 3 * a[i][j] + (i == j ? 4 : 0);
    return out;
}

// Exhaustive isomorphism test; fine up to n ~ 8.
inline bool isomorphic(const Graph& g, const Graph& h) {
    if (g.n() != h.n() || g.edge_count() != h.edge_count()) return false;
    if (g.degree_sequence() != h.degree_sequence()) return false;
    std::vector<int> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < g.n() && ok; ++i)
            for (int j = i + 1; j < g.n() && ok; ++j)
                if (g.adjacent(i, j) != h.adjacent(perm[i], perm[j])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Minimum adjacency bitstring over every permutation; an exact (slow)
// canonical form for n <= 7.
inline std::string brute_canonical(const Graph& g) {
    const int n = g.n();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string code(1, static_cast<char>(n));
        char byte = 0;
        int bits = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                byte = static_cast<char>((byte << 1) | (g.adjacent(perm[i], perm[j]) ? 1 : 0));
                if (++bits == 8) {
                    code.push_back(byte);
                    bits = 0;
                    byte = 0;
                }
            }
        if (bits) code.push_back(static_cast<char>(byte << (8 - bits)));
        if (best.empty() || code < best) best = code;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Largest |eigenvalue| via cyclic Jacobi rotations.
inline double jacobi_spectral_radius(const Graph& g) {
    const int n = g.n();
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1.0;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (off < 1e-24) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-18) continue;
                double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
    }
    double rho = 0.0;
    for (int i = 0; i < n; ++i) rho = std::max(rho, std::abs(a[i][i]));
    return rho;
}

// Ordered-tuple search for t disjoint P4s; exponential but exact.
inline bool naive_has_packing(const Graph& g, int t) {
    const int n = g.n();
    std::vector<int> tuple;
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, int depth) -> bool {
        if (depth == 4 * t) return true;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            int pos = depth % 4;
            if (pos > 0 && !g.adjacent(tuple.back(), v)) continue;
            used[v] = true;
            tuple.push_back(v);
            if (self(self, depth + 1)) return true;
            tuple.pop_back();
            used[v] = false;
        }
        return false;
    };
    return rec(rec, 0);
}

} // namespace oracle
