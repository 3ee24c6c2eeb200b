"""tP4 saturation and spectral radius toolkit."""

from specsat._core import (
    are_isomorphic,
    build_conjectured_even_family,
    build_equality_family,
    build_n4,
    canonical_code,
    catalog,
    CatalogEntry,
    check_delta_bound,
    check_fact_4_1,
    check_lemma_4_1,
    check_rowsum_sandwich,
    check_structural_lemmas,
    check_subdivision,
    check_subgraph_monotone,
    CheckResult,
    components,
    CriterionReport,
    decompose,
    edge_on_internal_path,
    enumerate_graphs,
    EnumerationSummary,
    evaluate_theorem_1_2,
    f_value,
    f_value_expanded,
    Fact41Result,
    FamilySpec,
    find_p4_packing,
    Graph,
    is_saturated,
    Lemma41Result,
    LemmaCheck,
    NeighborhoodDecomposition,
    PathPacking,
    polynomial_row_sums,
    recognize_equality_family,
    recognize_t1_family,
    rho_n4,
    run_acceptance,
    SaturationCertificate,
    scan_saturated,
    spectral_radius,
    SpectralResult,
    subdivide_edge,
    T1FamilyVerdict,
    walk_row_sum_cubed,
)

__all__ = [
    "are_isomorphic",
    "build_conjectured_even_family",
    "build_equality_family",
    "build_n4",
    "canonical_code",
    "catalog",
    "CatalogEntry",
    "check_delta_bound",
    "check_fact_4_1",
    "check_lemma_4_1",
    "check_rowsum_sandwich",
    "check_structural_lemmas",
    "check_subdivision",
    "check_subgraph_monotone",
    "CheckResult",
    "components",
    "CriterionReport",
    "decompose",
    "edge_on_internal_path",
    "enumerate_graphs",
    "EnumerationSummary",
    "evaluate_theorem_1_2",
    "f_value",
    "f_value_expanded",
    "Fact41Result",
    "FamilySpec",
    "find_p4_packing",
    "Graph",
    "is_saturated",
    "Lemma41Result",
    "LemmaCheck",
    "NeighborhoodDecomposition",
    "PathPacking",
    "polynomial_row_sums",
    "recognize_equality_family",
    "recognize_t1_family",
    "rho_n4",
    "run_acceptance",
    "SaturationCertificate",
    "scan_saturated",
    "spectral_radius",
    "SpectralResult",
    "subdivide_edge",
    "T1FamilyVerdict",
    "walk_row_sum_cubed",
]
