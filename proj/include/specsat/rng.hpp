#pragma once

#include "specsat/graph.hpp"

#include <cstdint>

namespace specsat {

// SplitMix64. The seeded sweeps must reproduce bit-identically across
// platforms, which rules out <random> distributions.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    int below(int m) { return static_cast<int>(next() % static_cast<std::uint64_t>(m)); }
    bool chance(double p) { return unit() < p; }
};

inline Graph random_graph(Rng& rng, int n, double p) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p)) g = g.add_edge(u, v);
    return g;
}

// Random spanning tree first, then independent extra edges: always connected.
inline Graph random_connected_graph(Rng& rng, int n, double p) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g = g.add_edge(rng.below(v), v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v) && rng.chance(p)) g = g.add_edge(u, v);
    return g;
}

} // namespace specsat
