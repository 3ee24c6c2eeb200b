#pragma once

#include "specsat/graph.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace specsat {

// The 12-vertex extremal gadget: a triangle 0,1,2, supports 3,4,5 (support
// 3+i hangs off triangle vertex i) and two pendant leaves per support.
Graph build_n4();

// Z-part multiplicities for the equality family (t-1) N4 + Z with
// Z = x2 K2 + x3 K3 + x4 K_{1,3} + ... + x7 K_{1,6}.
struct FamilySpec {
    int t = 2;
    int n = 12;
    std::array<int, 6> x{}; // x[i] = multiplicity of the component on i+2 vertices

    int& count(int i) { return x[i - 2]; } // i in [2, 7]
    int count(int i) const { return x[i - 2]; }
    int z_vertices() const;
    bool operator==(const FamilySpec&) const = default;
};

// Validates t >= 2, multiplicities >= 0 and sum_i i*x_i == n - 12(t-1);
// throws std::invalid_argument otherwise.
Graph build_equality_family(const FamilySpec& spec);

// Component-wise recogniser for the Theorem 1.1 equality class: exactly t-1
// components isomorphic to N4, everything else in the allowed Z set.
std::optional<FamilySpec> recognize_equality_family(const Graph& g, int t);

// t = 1 minimum-radius families: for even n the perfect matching, for odd n
// x1 K1 + x2 K2 + x3 K3 + y3 K_{1,3} + y4 K_{1,4} with x1 <= 1 and
// x1 (x2 + y3 + y4) = 0.
struct T1FamilyVerdict {
    bool member = false;
    bool even_case = false;
    int x1 = 0, x2 = 0, x3 = 0, y3 = 0, y4 = 0;
};

T1FamilyVerdict recognize_t1_family(const Graph& g);

// (t-1) N4 + (n - 12t + 12)/2 K2, the conjectured even-n minimiser;
// edge count (n + 12t - 12)/2.
Graph build_conjectured_even_family(int t, int n);

// Exact radius in the form (p + q sqrt(root)) / den.
struct ExactRho {
    long long p = 0, q = 0, root = 0, den = 1;
    double value() const;
};

struct CatalogEntry {
    std::string name;
    Graph graph;
    double expected_rho = 0.0;
    std::optional<ExactRho> exact;
    const char* source = "";
    double tolerance() const { return exact ? 1e-9 : 1e-4; }
};

// F1..F20 with their published radii, then N4 and the standard graphs.
const std::vector<CatalogEntry>& catalog();

const CatalogEntry& catalog_entry(const std::string& name);

} // namespace specsat
