#pragma once

#include <optional>
#include <string>
#include <vector>

namespace specsat {

// Floats in reports are fixed at 9 decimals; rounding before serialisation
// keeps the JSON byte-stable across runs and platforms.
double json_real(double x);
std::string format_real(double x); // "%.9f"

struct SummaryRow {
    std::string name;
    int n = 0;
    int edges = 0;
    std::optional<double> rho;
    std::optional<long long> min_f;
    std::optional<bool> saturated;
    std::optional<double> rho_delta; // computed minus expected
};

// Fixed-width table, byte-stable for identical input.
std::string render_summary(const std::vector<SummaryRow>& rows);

} // namespace specsat
