#pragma once

#include "specsat/graph.hpp"

#include <string>
#include <vector>

namespace specsat {

// Exact isomorphism code: canonical(g) == canonical(h) iff g and h are
// isomorphic. Computed by equitable colour refinement followed by a
// cell-respecting backtracking search for the maximal adjacency code.
struct CanonicalForm {
    std::string code;
    auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical(const Graph& g);

struct CanonicalLabeling {
    CanonicalForm form;
    std::vector<int> order; // order[pos] = original vertex at canonical position pos
};

CanonicalLabeling canonical_labeling(const Graph& g);

bool are_isomorphic(const Graph& g, const Graph& h);

// Stable equitable colouring (1-dimensional refinement); colour values are
// isomorphism-invariant ranks.
std::vector<int> refined_colors(const Graph& g);

} // namespace specsat
