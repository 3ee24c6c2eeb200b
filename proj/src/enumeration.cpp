#include "specsat/enumeration.hpp"

#include "specsat/canonical.hpp"
#include "specsat/errors.hpp"
#include "specsat/constructions.hpp"
#include "specsat/graph_io.hpp"
#include "specsat/packing.hpp"
#include "specsat/parallel.hpp"
#include "specsat/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "json.hpp"

namespace specsat {

namespace {

void check_cap(int n, bool allow_long) {
    if (n < 0 || n > kEnumerationCap)
        throw CapExceeded("enumeration caps at n = " + std::to_string(kEnumerationCap));
    if (n > kEnumerationFastCap && !allow_long)
        throw CapExceeded("n = 8, 9 enumeration is a long job; pass the long flag");
}

// Children of one representative under the canonical-parent rule: a child is
// kept iff removing its canonical last vertex recovers this parent. Each
// isomorphism class then survives from exactly one parent.
std::vector<Graph> accepted_children(const Graph& parent, const std::string& parent_code) {
    const int k = parent.n();
    std::vector<Graph> out;
    std::unordered_set<std::string> seen;
    const VertexMask top = VertexMask{1} << k;
    for (VertexMask nbrs = 0; nbrs < top; ++nbrs) {
        Graph child = parent.with_vertex(nbrs);
        CanonicalLabeling lab = canonical_labeling(child);
        if (!seen.insert(lab.form.code).second) continue;
        int deleted = lab.order.back();
        if (canonical(child.delete_vertex(deleted)).code == parent_code) out.push_back(child);
    }
    return out;
}

std::vector<Graph> next_level(const std::vector<Graph>& level) {
    std::vector<std::string> codes(level.size());
    std::vector<std::vector<Graph>> slots(level.size());
    parallel_for(level.size(), [&](std::size_t i) {
        slots[i] = accepted_children(level[i], canonical(level[i]).code);
    });
    std::vector<Graph> out;
    for (std::vector<Graph>& s : slots)
        out.insert(out.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
    return out;
}

std::vector<std::vector<Graph>>& level_cache() {
    static std::vector<std::vector<Graph>> cache{{Graph(0)}};
    return cache;
}

std::mutex cache_mutex;

} // namespace

const std::vector<Graph>& graph_classes(int n, bool allow_long) {
    check_cap(n, allow_long);
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto& cache = level_cache();
    while (static_cast<int>(cache.size()) <= n) cache.push_back(next_level(cache.back()));
    return cache[n];
}

void enumerate_graphs(int n, const std::function<void(const Graph&)>& fn, bool allow_long) {
    for (const Graph& g : graph_classes(n, allow_long)) fn(g);
}

namespace {

struct CheckpointState {
    long long classes_done = 0;
    std::vector<std::string> saturated_g6;
};

CheckpointState load_checkpoint(const std::string& path, int n, int t) {
    CheckpointState st;
    std::ifstream in(path);
    if (!in) return st;
    std::string line;
    if (!std::getline(in, line)) return st;
    std::istringstream head(line);
    std::string hash;
    int fn = -1, ft = -1;
    head >> hash >> fn >> ft >> st.classes_done;
    if (hash != "#" || fn != n || ft != t) return {};
    while (std::getline(in, line))
        if (!line.empty()) st.saturated_g6.push_back(line);
    return st;
}

void store_checkpoint(const std::string& path, int n, int t, const CheckpointState& st) {
    std::ofstream out(path, std::ios::trunc);
    out << "# " << n << " " << t << " " << st.classes_done << "\n";
    for (const std::string& g6 : st.saturated_g6) out << g6 << "\n";
}

} // namespace

EnumerationSummary scan_saturated(int n, int t, bool allow_long, const std::string& checkpoint_path) {
    if (t < 1) throw std::invalid_argument("t must be at least 1");
    const std::vector<Graph>& classes = graph_classes(n, allow_long);
    EnumerationSummary summary;
    summary.n = n;
    summary.t = t;
    summary.class_count = static_cast<long long>(classes.size());

    CheckpointState st;
    if (!checkpoint_path.empty()) st = load_checkpoint(checkpoint_path, n, t);
    if (st.classes_done > summary.class_count) st = {};

    std::vector<char> verdicts(classes.size(), 0);
    const std::size_t start = static_cast<std::size_t>(st.classes_done);
    constexpr std::size_t kBatch = 4096;
    for (std::size_t lo = start; lo < classes.size(); lo += kBatch) {
        std::size_t hi = std::min(classes.size(), lo + kBatch);
        parallel_for(hi - lo, [&](std::size_t off) {
            verdicts[lo + off] = is_saturated(classes[lo + off], t).saturated ? 1 : 0;
        });
        for (std::size_t i = lo; i < hi; ++i)
            if (verdicts[i]) st.saturated_g6.push_back(to_graph6(classes[i]));
        st.classes_done = static_cast<long long>(hi);
        if (!checkpoint_path.empty()) store_checkpoint(checkpoint_path, n, t, st);
    }
    summary.saturated_g6 = st.saturated_g6;

    if (!summary.saturated_g6.empty()) {
        int best_edges = Graph::kMaxVertices * Graph::kMaxVertices;
        double best_rho = 1e9;
        std::vector<double> rhos;
        for (const std::string& g6 : summary.saturated_g6) {
            Graph g = from_graph6(g6);
            best_edges = std::min(best_edges, g.edge_count());
            double r = g.edge_count() == 0 ? 0.0 : spectral_radius(g, 1e-10).rho;
            rhos.push_back(r);
            best_rho = std::min(best_rho, r);
        }
        summary.min_edges = best_edges;
        summary.min_rho = best_rho;
        for (std::size_t i = 0; i < summary.saturated_g6.size(); ++i) {
            Graph g = from_graph6(summary.saturated_g6[i]);
            if (g.edge_count() == best_edges) summary.argmin_edges.push_back(summary.saturated_g6[i]);
            if (rhos[i] <= best_rho + 1e-8) summary.argmin_rho.push_back(summary.saturated_g6[i]);
        }
    }
    return summary;
}

std::string summary_to_json(const EnumerationSummary& s) {
    nlohmann::ordered_json j;
    j["n"] = s.n;
    j["t"] = s.t;
    j["class_count"] = s.class_count;
    j["saturated"] = s.saturated_g6;
    j["min_edges"] = s.min_edges ? nlohmann::ordered_json(*s.min_edges) : nlohmann::ordered_json(nullptr);
    j["min_rho"] = s.min_rho ? nlohmann::ordered_json(json_real(*s.min_rho)) : nlohmann::ordered_json(nullptr);
    j["argmin_edges"] = s.argmin_edges;
    j["argmin_rho"] = s.argmin_rho;
    return j.dump();
}

TheoremScanReport verify_theorem_1_1_small(int t, int n_max, bool allow_long,
                                           std::optional<double> threshold) {
    if (t != 2) throw std::invalid_argument("the small-n scan is specified for t = 2");
    if (n_max > kEnumerationCap) throw CapExceeded("n_max caps at 9");
    TheoremScanReport report;
    report.t = t;
    report.threshold = threshold.value_or(rho_n4() - 1e-9);
    for (int n = 8; n <= n_max; ++n) {
        TheoremScanLevel level;
        level.n = n;
        EnumerationSummary summary = scan_saturated(n, t, allow_long);
        for (const std::string& g6 : summary.saturated_g6) {
            Graph g = from_graph6(g6);
            TheoremScanGraph entry;
            entry.g6 = g6;
            entry.rho = spectral_radius(g, 1e-10).rho;
            entry.above_threshold = entry.rho > report.threshold;
            entry.connected = g.is_connected();
            if (!entry.above_threshold) {
                report.pass = false;
                report.violations.push_back("n=" + std::to_string(n) + " " + g6 +
                                            " has rho below the threshold");
            }
            // A connected saturated graph at or below rho(N4) must be N4;
            // impossible on fewer than 12 vertices.
            if (entry.connected && entry.rho <= rho_n4() + 1e-9) {
                report.pass = false;
                report.violations.push_back("n=" + std::to_string(n) + " " + g6 +
                                            " is connected with rho <= rho(N4) but cannot be N4");
            }
            level.graphs.push_back(std::move(entry));
        }
        level.vacuous = level.graphs.empty();
        report.levels.push_back(std::move(level));
    }
    return report;
}

std::string theorem_scan_to_json(const TheoremScanReport& r) {
    nlohmann::ordered_json j;
    j["t"] = r.t;
    j["threshold"] = json_real(r.threshold);
    j["levels"] = nlohmann::ordered_json::array();
    for (const TheoremScanLevel& level : r.levels) {
        nlohmann::ordered_json l;
        l["n"] = level.n;
        l["vacuous"] = level.vacuous;
        l["graphs"] = nlohmann::ordered_json::array();
        for (const TheoremScanGraph& g : level.graphs) {
            nlohmann::ordered_json e;
            e["g6"] = g.g6;
            e["rho"] = json_real(g.rho);
            e["above_threshold"] = g.above_threshold;
            e["connected"] = g.connected;
            l["graphs"].push_back(std::move(e));
        }
        j["levels"].push_back(std::move(l));
    }
    j["violations"] = r.violations;
    j["pass"] = r.pass;
    return j.dump();
}

CheckResult check_delta_bound(const Graph& g, double tol) {
    CheckResult res;
    if (g.n() == 0 || spectral_radius(g, 1e-10).rho > rho_n4() + tol) {
        res.applicable = false;
        res.detail = "rho exceeds rho(N4): bound not claimed";
        return res;
    }
    res.pass = g.max_degree() <= 6;
    res.detail = "max degree " + std::to_string(g.max_degree());
    return res;
}

} // namespace specsat
