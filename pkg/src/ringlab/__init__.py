"""Finite-ring computational algebra: constructions, the delta ideal, and
mechanically re-checked structure claims."""
from __future__ import annotations

from ringlab.core import (
    AxiomError,
    BimoduleError,
    ComputationFault,
    DorrohData,
    ElementSet,
    FiniteRing,
    IdealError,
    LatticeLimitError,
    RinglabError,
    SizeCapError,
    build_constant_diagonal_triangular,
    build_corner,
    build_dorroh,
    build_matrix_ring,
    build_product,
    build_quotient,
    build_upper_triangular,
    build_zmod,
    element_sets,
    load_ring,
    renamed,
    ring_from_json,
    ring_to_json,
    save_ring,
    units_map,
    verify_axioms,
)
from ringlab.ideals import (
    all_right_ideals,
    ideal_core,
    ideal_sum,
    is_delta_small,
    is_direct_summand,
    is_essential,
    is_right_ideal,
    is_two_sided_ideal,
    maximal_right_ideals,
    minimal_right_ideals,
    principal_right_ideal,
    right_ideal_closure,
    socle,
    two_sided_closure,
    two_sided_ideals,
)
from ringlab.radicals import (
    DeltaComputation,
    DeltaDisagreement,
    delta,
    delta_mask,
    jacobson,
    qnil_set,
)
from ringlab.properties import (
    Certificate,
    PropertyName,
    element_property,
    idempotents_lift,
    property_mask,
    recheck_certificate,
    ring_property,
    spectral_candidates,
)
from ringlab.catalog import (
    CatalogEntry,
    PresetError,
    build_entry,
    build_preset,
    default_catalog,
    load_catalog_manifest,
    verify_expected,
)
from ringlab.claims import (
    Claim,
    TheoremResult,
    has_violation,
    registry,
    search_counterexample,
    theorem_suite,
)
from ringlab.report import build_report, render_text

__version__ = "0.1.0"

__all__ = [
    "AxiomError",
    "BimoduleError",
    "CatalogEntry",
    "Certificate",
    "Claim",
    "ComputationFault",
    "DeltaComputation",
    "DeltaDisagreement",
    "DorrohData",
    "ElementSet",
    "FiniteRing",
    "IdealError",
    "LatticeLimitError",
    "PresetError",
    "PropertyName",
    "RinglabError",
    "SizeCapError",
    "TheoremResult",
    "all_right_ideals",
    "build_constant_diagonal_triangular",
    "build_corner",
    "build_dorroh",
    "build_entry",
    "build_matrix_ring",
    "build_preset",
    "build_product",
    "build_quotient",
    "build_report",
    "build_upper_triangular",
    "build_zmod",
    "default_catalog",
    "delta",
    "delta_mask",
    "element_property",
    "element_sets",
    "has_violation",
    "ideal_core",
    "ideal_sum",
    "idempotents_lift",
    "is_delta_small",
    "is_direct_summand",
    "is_essential",
    "is_right_ideal",
    "is_two_sided_ideal",
    "jacobson",
    "load_catalog_manifest",
    "load_ring",
    "maximal_right_ideals",
    "minimal_right_ideals",
    "principal_right_ideal",
    "property_mask",
    "qnil_set",
    "recheck_certificate",
    "registry",
    "renamed",
    "render_text",
    "right_ideal_closure",
    "ring_from_json",
    "ring_property",
    "ring_to_json",
    "save_ring",
    "search_counterexample",
    "socle",
    "spectral_candidates",
    "theorem_suite",
    "two_sided_closure",
    "two_sided_ideals",
    "units_map",
    "verify_axioms",
    "verify_expected",
]
