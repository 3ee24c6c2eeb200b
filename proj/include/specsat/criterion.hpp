#pragma once

#include "specsat/graph.hpp"
#include "specsat/spectral.hpp"

#include <string>
#include <vector>

namespace specsat {

// F(v) = d(v)^2 + sum_{w in N(v) u N2(v)} |N(w) cap N(v)| d(w)
//        - sum_{w in N(v)} 2 d(w) - 3 d(v) + 4.
// Equals the v-th row sum of p(A); exact integer arithmetic throughout.
long long f_value(const Graph& g, int v);

// Same quantity through the expanded form
// d^2 - 5d + 4 + sum_{w in N(v)} |N(w) cap N(v)| (d(w) - 2)
//             + sum_{w in N2(v)} |N(w) cap N(v)| d(w) - 2 e(A,B).
long long f_value_expanded(const Graph& g, int v);

struct CriterionReport {
    std::vector<long long> f_values;
    long long min_f = 0;
    bool all_nonneg = false;
    bool all_zero = false;
    enum class Bound { rho_at_least_rho_n4, rho_equals_rho_n4, inconclusive };
    Bound implied_bound = Bound::inconclusive;
    double rho = 0.0;
    bool spectral_confirmed = false; // the rho cross-check agreed with the verdict
};

// Requires a connected graph on at least 3 vertices (the theorem's
// hypotheses); rejects anything else.
CriterionReport evaluate_theorem_1_2(const Graph& g, double tol = 1e-9);

std::string criterion_report_to_json(const CriterionReport& r);

struct Fact41Result {
    bool applicable = false; // every second neighbour has degree >= 2
    bool pass = false;
    bool equality = false;   // slack is zero and every second neighbour has degree 2
    long long slack = 0;     // sum_{w in B} |N(w) cap A| d(w) - 2 e(A,B)
};

Fact41Result check_fact_4_1(const Graph& g, int v);

struct Lemma41Result {
    bool applicable = false; // connected, tP4-saturated, rho <= rho(N4), d(v)=3, e(A)=0
    bool pass = false;
    bool equality = false;
    long long lhs = 0; // sum_{w in B} |N(w) cap A| d(w)
    long long rhs = 0; // 2 e(A,B) + 2
    std::string detail;
};

Lemma41Result check_lemma_4_1(const Graph& g, int v, int t, double tol = 1e-9);

} // namespace specsat
