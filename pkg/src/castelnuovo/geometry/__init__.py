"""Exact geometry of the nodal degeneration: chords of rational normal curves and their incidences."""
from .curves import (
    INFINITY,
    Chord,
    RationalNormalCurvePoint,
    as_parameter,
    chord_subspace,
    evaluate_form,
    imposes_identification,
    pullback_series,
)
from .experiment import SplitMix64, conservation_experiment, draw_parameters, run_trial
from .fields import (
    QQ,
    PrimeField,
    QuadraticExtension,
    QuadraticNumberField,
    common_field,
    field_of,
    parse_field,
)
from .finite import DEFAULT_ENUMERATION_CAP, finite_field_count, gaussian_binomial
from .fourlines import (
    PencilSolutionReport,
    degenerate_report,
    incidence_form,
    line_from_plucker,
    plucker_coordinates,
    plucker_pairing,
    plucker_relation,
    solve_four_lines,
    squarefree_split,
    try_solve_four_lines,
)
from .instances import Instance, canonical_json, format_instance, load_instance, parse_instance
from .linalg import LinearSubspace, kernel, meets, rank, rref

__all__ = [
    "INFINITY", "Chord", "RationalNormalCurvePoint", "as_parameter", "chord_subspace", "evaluate_form",
    "imposes_identification", "pullback_series", "SplitMix64", "conservation_experiment",
    "draw_parameters", "run_trial", "QQ", "PrimeField", "QuadraticExtension", "QuadraticNumberField",
    "common_field", "field_of", "parse_field", "DEFAULT_ENUMERATION_CAP", "finite_field_count",
    "gaussian_binomial", "PencilSolutionReport", "degenerate_report",
    "incidence_form", "line_from_plucker", "plucker_coordinates",
    "plucker_pairing", "plucker_relation", "solve_four_lines", "squarefree_split", "try_solve_four_lines", "Instance",
    "canonical_json", "format_instance", "load_instance", "parse_instance", "LinearSubspace", "kernel",
    "meets", "rank", "rref",
]
