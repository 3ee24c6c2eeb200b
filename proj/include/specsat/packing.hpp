#pragma once

#include "specsat/graph.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace specsat {

using PathQuad = std::array<int, 4>; // a-b-c-d with a < d

struct PathPacking {
    std::vector<PathQuad> paths;
};

// Exhaustive backtracking for t vertex-disjoint copies of P4. Paths are
// recorded smaller endpoint first and chosen in increasing order of that
// endpoint, so the first packing found is deterministic and "nullopt" is a
// proof of tP4-freeness.
std::optional<PathPacking> find_p4_packing(const Graph& g, int t);

// Re-validates a packing against the host graph with plain edge lookups.
bool packing_valid(const Graph& g, const PathPacking& p, int t);

struct SaturationCertificate {
    int t = 0;
    bool free = false;
    bool saturated = false;
    // one witness per non-edge of G, in lexicographic non-edge order
    std::vector<std::pair<std::pair<int, int>, PathPacking>> witnesses;
    std::optional<std::pair<int, int>> failing_non_edge;
};

SaturationCertificate is_saturated(const Graph& g, int t);

std::string certificate_to_json(const SaturationCertificate& c);

// Structural consequences of tP4-saturation (degree-2 vertices sit in
// triangles, the graph is not a tree, the forbidden adjacencies around
// degree 1/2/3 vertices). The caller asserts that saturation has been
// verified; a reported violation falsifies either that claim or this
// implementation and must abort the caller.
struct LemmaCheck {
    std::string lemma;
    bool applicable = true;
    std::vector<std::string> violations;
    bool pass() const { return violations.empty(); }
};

std::vector<LemmaCheck> check_structural_lemmas(const Graph& g, int t, bool saturation_verified);

} // namespace specsat
