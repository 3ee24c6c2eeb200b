#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "specsat/canonical.hpp"
#include "specsat/constructions.hpp"
#include "specsat/criterion.hpp"
#include "specsat/enumeration.hpp"
#include "specsat/graph_io.hpp"
#include "specsat/packing.hpp"
#include "specsat/spectral.hpp"
#include "specsat/verify.hpp"

namespace py = pybind11;
using namespace specsat;

PYBIND11_MODULE(_core, m) {
    m.doc() = "tP4 saturation and spectral radius toolkit";

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::n)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("degree", &Graph::degree)
        .def("adjacent", &Graph::adjacent)
        .def("edges", &Graph::edges)
        .def("non_edges", &Graph::non_edges)
        .def("degree_sequence", &Graph::degree_sequence)
        .def("add_edge", &Graph::add_edge)
        .def("without_edge", &Graph::without_edge)
        .def("delete_vertex", &Graph::delete_vertex)
        .def("disjoint_union", &Graph::disjoint_union)
        .def("is_connected", &Graph::is_connected)
        .def("is_tree", &Graph::is_tree)
        .def("to_graph6", [](const Graph& g) { return to_graph6(g); })
        .def("to_json", [](const Graph& g) { return graph_to_json(g); })
        .def_static("from_graph6", [](const std::string& s) { return from_graph6(s); })
        .def_static("from_json", &graph_from_json)
        .def_static("complete", &Graph::complete)
        .def_static("star", &Graph::star)
        .def_static("path", &Graph::path)
        .def_static("cycle", &Graph::cycle)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.n()) + ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    py::class_<SpectralResult>(m, "SpectralResult")
        .def_readonly("rho", &SpectralResult::rho)
        .def_readonly("residual", &SpectralResult::residual)
        .def_readonly("iterations", &SpectralResult::iterations)
        .def_readonly("perron", &SpectralResult::perron);

    py::class_<NeighborhoodDecomposition>(m, "NeighborhoodDecomposition")
        .def_readonly("root", &NeighborhoodDecomposition::root)
        .def_property_readonly("a", [](const NeighborhoodDecomposition& d) { return mask_vertices(d.a); })
        .def_property_readonly("b", [](const NeighborhoodDecomposition& d) { return mask_vertices(d.b); })
        .def_property_readonly("c", [](const NeighborhoodDecomposition& d) { return mask_vertices(d.c); })
        .def_readonly("e_a", &NeighborhoodDecomposition::e_a)
        .def_readonly("e_ab", &NeighborhoodDecomposition::e_ab)
        .def_readonly("e_b", &NeighborhoodDecomposition::e_b)
        .def_readonly("e_bc", &NeighborhoodDecomposition::e_bc);

    py::class_<CriterionReport>(m, "CriterionReport")
        .def_readonly("f_values", &CriterionReport::f_values)
        .def_readonly("min_f", &CriterionReport::min_f)
        .def_readonly("all_nonneg", &CriterionReport::all_nonneg)
        .def_readonly("all_zero", &CriterionReport::all_zero)
        .def_readonly("rho", &CriterionReport::rho)
        .def_readonly("spectral_confirmed", &CriterionReport::spectral_confirmed)
        .def_property_readonly("implied_bound", [](const CriterionReport& r) {
            switch (r.implied_bound) {
                case CriterionReport::Bound::rho_at_least_rho_n4: return "rho_at_least_rho_N4";
                case CriterionReport::Bound::rho_equals_rho_n4: return "rho_equals_rho_N4";
                default: return "inconclusive";
            }
        })
        .def("to_json", &criterion_report_to_json);

    py::class_<PathPacking>(m, "PathPacking")
        .def_readonly("paths", &PathPacking::paths);

    py::class_<SaturationCertificate>(m, "SaturationCertificate")
        .def_readonly("t", &SaturationCertificate::t)
        .def_readonly("free", &SaturationCertificate::free)
        .def_readonly("saturated", &SaturationCertificate::saturated)
        .def_readonly("witnesses", &SaturationCertificate::witnesses)
        .def_readonly("failing_non_edge", &SaturationCertificate::failing_non_edge)
        .def("to_json", &certificate_to_json);

    py::class_<FamilySpec>(m, "FamilySpec")
        .def(py::init<>())
        .def_readwrite("t", &FamilySpec::t)
        .def_readwrite("n", &FamilySpec::n)
        .def_property("multiplicities",
                      [](const FamilySpec& s) { return s.x; },
                      [](FamilySpec& s, const std::array<int, 6>& x) { s.x = x; });

    py::class_<T1FamilyVerdict>(m, "T1FamilyVerdict")
        .def_readonly("member", &T1FamilyVerdict::member)
        .def_readonly("even_case", &T1FamilyVerdict::even_case)
        .def_readonly("x1", &T1FamilyVerdict::x1)
        .def_readonly("x2", &T1FamilyVerdict::x2)
        .def_readonly("x3", &T1FamilyVerdict::x3)
        .def_readonly("y3", &T1FamilyVerdict::y3)
        .def_readonly("y4", &T1FamilyVerdict::y4);

    py::class_<CatalogEntry>(m, "CatalogEntry")
        .def_readonly("name", &CatalogEntry::name)
        .def_readonly("graph", &CatalogEntry::graph)
        .def_readonly("expected_rho", &CatalogEntry::expected_rho)
        .def_property_readonly("tolerance", &CatalogEntry::tolerance);

    py::class_<EnumerationSummary>(m, "EnumerationSummary")
        .def_readonly("n", &EnumerationSummary::n)
        .def_readonly("t", &EnumerationSummary::t)
        .def_readonly("class_count", &EnumerationSummary::class_count)
        .def_readonly("saturated_g6", &EnumerationSummary::saturated_g6)
        .def_readonly("min_edges", &EnumerationSummary::min_edges)
        .def_readonly("min_rho", &EnumerationSummary::min_rho)
        .def_readonly("argmin_edges", &EnumerationSummary::argmin_edges)
        .def_readonly("argmin_rho", &EnumerationSummary::argmin_rho)
        .def("to_json", &summary_to_json);

    m.def("spectral_radius", [](const Graph& g, double tol) { return spectral_radius(g, tol); },
          py::arg("graph"), py::arg("tol") = 1e-10);
    m.def("rho_n4", &rho_n4);
    m.def("walk_row_sum_cubed", &walk_row_sum_cubed);
    m.def("polynomial_row_sums", &polynomial_row_sums);
    m.def("f_value", &f_value);
    m.def("f_value_expanded", &f_value_expanded);
    m.def("evaluate_theorem_1_2", &evaluate_theorem_1_2, py::arg("graph"), py::arg("tol") = 1e-9);
    m.def("decompose", &decompose);
    m.def("components", [](const Graph& g) {
        std::vector<std::pair<Graph, std::vector<int>>> out;
        for (const ComponentSplit& c : components(g)) out.emplace_back(c.graph, c.vertices);
        return out;
    });
    m.def("canonical_code", [](const Graph& g) { return py::bytes(canonical(g).code); });
    m.def("are_isomorphic", &are_isomorphic);
    m.def("find_p4_packing", &find_p4_packing);
    m.def("is_saturated", &is_saturated);
    m.def("build_n4", &build_n4);
    m.def("build_equality_family", &build_equality_family);
    m.def("recognize_equality_family", &recognize_equality_family);
    m.def("recognize_t1_family", &recognize_t1_family);
    m.def("build_conjectured_even_family", &build_conjectured_even_family);
    m.def("catalog", [] { return catalog(); });
    m.def("enumerate_graphs",
          [](int n, bool allow_long) { return graph_classes(n, allow_long); },
          py::arg("n"), py::arg("allow_long") = false);
    m.def("scan_saturated",
          [](int n, int t, bool allow_long) { return scan_saturated(n, t, allow_long); },
          py::arg("n"), py::arg("t"), py::arg("allow_long") = false);
    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("applicable", &CheckResult::applicable)
        .def_readonly("pass_", &CheckResult::pass)
        .def_readonly("detail", &CheckResult::detail);

    py::class_<Fact41Result>(m, "Fact41Result")
        .def_readonly("applicable", &Fact41Result::applicable)
        .def_readonly("pass_", &Fact41Result::pass)
        .def_readonly("equality", &Fact41Result::equality)
        .def_readonly("slack", &Fact41Result::slack);

    py::class_<Lemma41Result>(m, "Lemma41Result")
        .def_readonly("applicable", &Lemma41Result::applicable)
        .def_readonly("pass_", &Lemma41Result::pass)
        .def_readonly("equality", &Lemma41Result::equality)
        .def_readonly("lhs", &Lemma41Result::lhs)
        .def_readonly("rhs", &Lemma41Result::rhs)
        .def_readonly("detail", &Lemma41Result::detail);

    py::class_<LemmaCheck>(m, "LemmaCheck")
        .def_readonly("lemma", &LemmaCheck::lemma)
        .def_readonly("applicable", &LemmaCheck::applicable)
        .def_readonly("violations", &LemmaCheck::violations)
        .def("pass_", &LemmaCheck::pass);

    m.def("check_rowsum_sandwich", &check_rowsum_sandwich, py::arg("graph"), py::arg("tol") = 1e-8);
    m.def("check_subgraph_monotone", &check_subgraph_monotone, py::arg("graph"), py::arg("subgraph"),
          py::arg("embedding"), py::arg("tol") = 1e-8);
    m.def("check_subdivision", &check_subdivision, py::arg("graph"), py::arg("u"), py::arg("v"),
          py::arg("tol") = 1e-8);
    m.def("edge_on_internal_path", &edge_on_internal_path);
    m.def("subdivide_edge", &subdivide_edge);
    m.def("check_fact_4_1", &check_fact_4_1);
    m.def("check_lemma_4_1", &check_lemma_4_1, py::arg("graph"), py::arg("v"), py::arg("t"),
          py::arg("tol") = 1e-9);
    m.def("check_structural_lemmas", &check_structural_lemmas, py::arg("graph"), py::arg("t"),
          py::arg("saturation_verified"));
    m.def("check_delta_bound", &check_delta_bound, py::arg("graph"), py::arg("tol") = 1e-9);
    m.def("run_acceptance", [](bool long_tier) {
        std::vector<std::tuple<std::string, bool, bool, std::string>> out;
        for (const CriterionResult& r : run_acceptance(long_tier))
            out.emplace_back(r.id, r.ran, r.pass, r.detail);
        return out;
    }, py::arg("long_tier") = false);
}
