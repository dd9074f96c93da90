"""Classification machinery: the (q, s) parametrization and its
restrictions, the diameter-3 two-parameter family, the classifier, the
high-diameter impossibility witness, and the feasibility sieve."""

from .params import (
    ArrayNotInFamilyError,
    EtaReport,
    ParameterConstraintError,
    QSParameters,
    beta_of,
    chebyshev_T,
    curtin_gap,
    curtin_gap_closed_form,
    d4_contradiction_witness,
    eta_of,
    module_multiplicity,
    q_from_beta,
    qs_evaluate,
    s_from_array,
)
from .family import (
    Classification,
    D3FamilyPoint,
    classify,
    d3_family,
    d3_family_matches,
    known_family_array,
)
from .sieve import (
    FILTER_NAMES,
    CandidateRecord,
    evaluate_candidate,
    sieve,
    write_records,
)

__all__ = [
    "ArrayNotInFamilyError",
    "EtaReport",
    "ParameterConstraintError",
    "QSParameters",
    "beta_of",
    "chebyshev_T",
    "curtin_gap",
    "curtin_gap_closed_form",
    "d4_contradiction_witness",
    "eta_of",
    "module_multiplicity",
    "q_from_beta",
    "qs_evaluate",
    "s_from_array",
    "Classification",
    "D3FamilyPoint",
    "classify",
    "d3_family",
    "d3_family_matches",
    "known_family_array",
    "FILTER_NAMES",
    "CandidateRecord",
    "evaluate_candidate",
    "sieve",
    "write_records",
]
