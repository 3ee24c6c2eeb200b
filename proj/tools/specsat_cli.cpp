// Command line surface: every subcommand emits a deterministic JSON report
// (9-decimal floats, fixed key order) and a nonzero exit code when any
// assertion inside the run fails.
//
// Exit codes: 0 ok, 1 failed checks, 65 parse failure, 66 infeasible family
// spec, 67 size cap exceeded, 70 unexpected error.

#include "specsat/canonical.hpp"
#include "specsat/constructions.hpp"
#include "specsat/criterion.hpp"
#include "specsat/enumeration.hpp"
#include "specsat/errors.hpp"
#include "specsat/graph_io.hpp"
#include "specsat/packing.hpp"
#include "specsat/report.hpp"
#include "specsat/spectral.hpp"
#include "specsat/verify.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;
using namespace specsat;

constexpr int kExitCheckFailed = 1;
constexpr int kExitParse = 65;
constexpr int kExitInfeasible = 66;
constexpr int kExitCap = 67;
constexpr int kExitInternal = 70;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::trunc);
    if (!out) throw ParseError("cannot open output path " + out_path);
    out << text << "\n";
}

ordered_json spectral_json(const SpectralResult& r) {
    ordered_json j;
    j["rho"] = json_real(r.rho);
    j["residual"] = json_real(r.residual);
    j["iterations"] = r.iterations;
    return j;
}

int cmd_radius(const std::string& input, double tol, const std::string& out) {
    std::vector<Graph> graphs = load_graphs(input);
    if (graphs.empty()) throw ParseError("no graphs in " + input);
    if (graphs.size() == 1) {
        write_output(spectral_json(spectral_radius(graphs[0], tol)).dump(), out);
    } else {
        ordered_json j;
        j["results"] = ordered_json::array();
        for (const Graph& g : graphs) j["results"].push_back(spectral_json(spectral_radius(g, tol)));
        write_output(j.dump(), out);
    }
    return 0;
}

int cmd_criterion(const std::string& input, double tol, const std::string& out) {
    std::vector<Graph> graphs = load_graphs(input);
    if (graphs.empty()) throw ParseError("no graphs in " + input);
    CriterionReport r = evaluate_theorem_1_2(graphs[0], tol);
    write_output(criterion_report_to_json(r), out);
    return r.spectral_confirmed ? 0 : kExitCheckFailed;
}

int cmd_packing(const std::string& input, int t, const std::string& out) {
    std::vector<Graph> graphs = load_graphs(input);
    if (graphs.empty()) throw ParseError("no graphs in " + input);
    std::optional<PathPacking> p = find_p4_packing(graphs[0], t);
    ordered_json j;
    j["t"] = t;
    j["found"] = p.has_value();
    j["paths"] = ordered_json::array();
    if (p)
        for (const PathQuad& q : p->paths) j["paths"].push_back({q[0], q[1], q[2], q[3]});
    write_output(j.dump(), out);
    return 0;
}

int cmd_saturation(const std::string& input, int t, const std::string& out) {
    std::vector<Graph> graphs = load_graphs(input);
    if (graphs.empty()) throw ParseError("no graphs in " + input);
    write_output(certificate_to_json(is_saturated(graphs[0], t)), out);
    return 0;
}

int cmd_catalog(const std::string& out) {
    std::vector<SummaryRow> rows;
    ordered_json side = ordered_json::array();
    std::string g6_lines;
    for (const CatalogEntry& e : catalog()) {
        double rho = spectral_radius(e.graph, 1e-11).rho;
        SummaryRow row;
        row.name = e.name;
        row.n = e.graph.n();
        row.edges = e.graph.edge_count();
        row.rho = rho;
        row.rho_delta = rho - e.expected_rho;
        rows.push_back(row);
        ordered_json j;
        j["name"] = e.name;
        j["n"] = e.graph.n();
        j["edges"] = e.graph.edge_count();
        j["expected_rho"] = json_real(e.expected_rho);
        j["computed_rho"] = json_real(rho);
        j["source"] = e.source;
        side.push_back(std::move(j));
        g6_lines += to_graph6(e.graph) + "\n";
    }
    if (out.empty()) {
        std::cout << render_summary(rows);
        return 0;
    }
    std::ofstream g6(out, std::ios::trunc);
    if (!g6) throw ParseError("cannot open output path " + out);
    g6 << g6_lines;
    std::ofstream meta(out + ".json", std::ios::trunc);
    meta << side.dump(2) << "\n";
    std::cout << render_summary(rows);
    return 0;
}

int cmd_family(int t, int n, const std::vector<int>& mult, const std::string& out) {
    Graph g(0);
    FamilySpec spec;
    spec.t = t;
    if (mult.empty()) {
        g = build_conjectured_even_family(t, n);
        spec.n = n;
        spec.count(2) = (n - 12 * (t - 1)) / 2;
    } else {
        for (int i = 2; i <= 7; ++i) spec.count(i) = mult[i - 2];
        spec.n = 12 * (t - 1) + spec.z_vertices();
        if (n != 0 && n != spec.n)
            throw InfeasibleSpec("requested n does not match the multiplicities");
        g = build_equality_family(spec);
    }
    SaturationCertificate cert = is_saturated(g, t);
    double rho = spectral_radius(g, 1e-10).rho;
    ordered_json j;
    j["t"] = t;
    j["n"] = g.n();
    j["edges"] = g.edge_count();
    j["multiplicities"] = {{"x2", spec.count(2)}, {"x3", spec.count(3)}, {"x4", spec.count(4)},
                           {"x5", spec.count(5)}, {"x6", spec.count(6)}, {"x7", spec.count(7)}};
    j["graph6"] = to_graph6(g);
    j["rho"] = json_real(rho);
    j["rho_matches_rho_n4"] = std::abs(rho - rho_n4()) <= 1e-9;
    j["saturated"] = cert.saturated;
    write_output(j.dump(), out);
    return cert.saturated ? 0 : kExitCheckFailed;
}

int cmd_enumerate(int n, std::optional<int> t, bool long_jobs, const std::string& checkpoint,
                  const std::string& out) {
    if (t) {
        EnumerationSummary s = scan_saturated(n, *t, long_jobs, checkpoint);
        write_output(summary_to_json(s), out);
        return 0;
    }
    const std::vector<Graph>& classes = graph_classes(n, long_jobs);
    ordered_json j;
    j["n"] = n;
    j["classes"] = classes.size();
    if (!out.empty()) {
        std::ofstream g6(out, std::ios::trunc);
        if (!g6) throw ParseError("cannot open output path " + out);
        for (const Graph& g : classes) g6 << to_graph6(g) << "\n";
        j["written"] = out;
    }
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_verify_paper(bool long_jobs, const std::string& out) {
    std::vector<CriterionResult> results = run_acceptance(long_jobs);
    for (const CriterionResult& r : results) {
        const char* status = !r.ran ? "SKIP" : (r.pass ? "PASS" : "FAIL");
        std::printf("[%s] %s %s (%.1fs)\n        %s\n", status, r.id.c_str(), r.name.c_str(),
                    r.seconds, r.detail.c_str());
    }
    std::string report = acceptance_to_json(results);
    if (!out.empty()) write_output(report, out);
    return all_passed(results) ? 0 : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification toolkit for tP4 saturation and spectral radii"};
    app.require_subcommand(1);

    std::string input, out, checkpoint;
    int t = 2, n = 0;
    double tol = 1e-9;
    bool long_jobs = false;
    std::vector<int> mult;

    auto* radius = app.add_subcommand("radius", "spectral radius of a graph file");
    radius->add_option("--input", input, "graph6 or JSON graph file")->required();
    radius->add_option("--tol", tol, "solver tolerance");
    radius->add_option("--out", out, "report path");

    auto* criterion = app.add_subcommand("criterion", "per-vertex F(v) report with rho cross-check");
    criterion->add_option("--input", input)->required();
    criterion->add_option("--tol", tol);
    criterion->add_option("--out", out);

    auto* packing = app.add_subcommand("packing", "search for t vertex-disjoint P4s");
    packing->add_option("--input", input)->required();
    packing->add_option("--t", t)->required();
    packing->add_option("--out", out);

    auto* saturation = app.add_subcommand("saturation", "tP4-saturation certificate");
    saturation->add_option("--input", input)->required();
    saturation->add_option("--t", t)->required();
    saturation->add_option("--out", out);

    auto* catalog_cmd = app.add_subcommand("catalog", "export the graph catalog with radii");
    catalog_cmd->add_option("--out", out, "graph6 path; sidecar JSON lands at <out>.json");

    auto* family = app.add_subcommand("family", "build the (t-1)N4 + Z families");
    family->add_option("--t", t)->required();
    family->add_option("--n", n, "order; required without multiplicities");
    family->add_option("--z", mult, "six Z multiplicities x2..x7")->expected(6);
    family->add_option("--out", out);

    auto* enumerate_cmd = app.add_subcommand("enumerate", "isomorphism classes / saturation scan");
    enumerate_cmd->add_option("--n", n)->required();
    std::optional<int> scan_t;
    enumerate_cmd->add_option("--t", scan_t, "scan for tP4-saturation");
    enumerate_cmd->add_flag("--long", long_jobs, "allow n = 8, 9");
    enumerate_cmd->add_option("--checkpoint", checkpoint, "resumable scan state file");
    enumerate_cmd->add_option("--out", out);

    auto* verify = app.add_subcommand("verify-paper", "run the full verification suite");
    verify->add_flag("--long", long_jobs, "include the n = 8, 9 tiers");
    verify->add_option("--out", out, "consolidated JSON report path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (radius->parsed()) return cmd_radius(input, tol, out);
        if (criterion->parsed()) return cmd_criterion(input, tol, out);
        if (packing->parsed()) return cmd_packing(input, t, out);
        if (saturation->parsed()) return cmd_saturation(input, t, out);
        if (catalog_cmd->parsed()) return cmd_catalog(out);
        if (family->parsed()) return cmd_family(t, n, mult, out);
        if (enumerate_cmd->parsed()) return cmd_enumerate(n, scan_t, long_jobs, checkpoint, out);
        if (verify->parsed()) return cmd_verify_paper(long_jobs, out);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const InfeasibleSpec& e) {
        std::cerr << "infeasible family spec: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
