#pragma once

#include "specsat/graph.hpp"
#include "specsat/spectral.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace specsat {

// Isomorph-free exhaustive generation: one-vertex extensions filtered by the
// canonical-parent rule, so each class appears exactly once and no global
// deduplication is needed. Hard cap n <= 9; levels 8 and 9 sit behind the
// long-job flag.
constexpr int kEnumerationCap = 9;
constexpr int kEnumerationFastCap = 7;

const std::vector<Graph>& graph_classes(int n, bool allow_long = false);
void enumerate_graphs(int n, const std::function<void(const Graph&)>& fn, bool allow_long = false);

struct EnumerationSummary {
    int n = 0;
    int t = 0;
    long long class_count = 0;
    std::vector<std::string> saturated_g6;
    std::optional<int> min_edges;
    std::optional<double> min_rho;
    std::vector<std::string> argmin_edges;
    std::vector<std::string> argmin_rho;
};

// Scans every isomorphism class on n vertices for tP4-saturation. When a
// checkpoint path is given, progress is appended there and a partial scan
// resumes from it (the generation order is deterministic).
EnumerationSummary scan_saturated(int n, int t, bool allow_long = false,
                                  const std::string& checkpoint_path = {});

std::string summary_to_json(const EnumerationSummary& s);

struct TheoremScanGraph {
    std::string g6;
    double rho = 0.0;
    bool above_threshold = false;
    bool connected = false;
};

struct TheoremScanLevel {
    int n = 0;
    bool vacuous = true;
    std::vector<TheoremScanGraph> graphs;
};

struct TheoremScanReport {
    int t = 2;
    double threshold = 0.0;
    std::vector<TheoremScanLevel> levels; // n = 8 .. n_max
    std::vector<std::string> violations;
    bool pass = true;
};

// Every 2P4-saturated graph on 8 <= n <= n_max must clear the threshold
// (default rho(N4) - 1e-9); a connected one at or below rho(N4) would have to
// be N4 itself, impossible below 12 vertices. Vacuous levels are recorded.
TheoremScanReport verify_theorem_1_1_small(int t, int n_max, bool allow_long = false,
                                           std::optional<double> threshold = std::nullopt);

std::string theorem_scan_to_json(const TheoremScanReport& r);

// Max degree at most 6 whenever rho(G) <= rho(N4) + tol.
CheckResult check_delta_bound(const Graph& g, double tol = 1e-9);

} // namespace specsat
