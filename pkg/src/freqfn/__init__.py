"""Exact rational engine for window averages of step functions.

Computes the averaging operator A_r f(x), its supremum over radii (the
Hardy-Littlewood maximal value), and the frequency — the infimum of the
maximizing radii — exactly, for finite nonnegative rational step
functions, plus the level-set scans, discontinuity certificates, and
Lebesgue-point classification built on them.
"""

from .analysis import (
    DiscontinuityCertificate,
    InvariantViolation,
    LebesgueClass,
    ScanReport,
    band_extent,
    discontinuities,
    high_side_collapse,
    lebesgue_classify,
    level_density,
    non_lebesgue_witnesses,
    scan,
    weak_type_check,
    zero_frequency_witnesses,
    zero_set_fraction,
)
from .corpus import (
    CORPUS_IDS,
    CorpusSpec,
    closed_form_frequency,
    closed_form_maximal,
    generate,
)
from .freq import (
    Attainment,
    FreqResult,
    Span,
    aux_frequency,
    e_set,
    frequency,
    maximal,
)
from .oracle import OracleResult, oracle_eval
from .output import emit_plot
from .profile import (
    Profile,
    build_profile,
    check_profile_invariants,
    continuity_certificate,
    eval_average,
    local_limit,
)
from .rational import Rat, as_rat, format_rational, inv_pow2, parse_rational
from .stepfn import ParseError, Piece, StepFn, StepFnError, parse_stepfn, serialize_stepfn

__version__ = "0.1.0"

__all__ = [
    "Attainment",
    "CORPUS_IDS",
    "CorpusSpec",
    "DiscontinuityCertificate",
    "FreqResult",
    "InvariantViolation",
    "LebesgueClass",
    "OracleResult",
    "ParseError",
    "Piece",
    "Profile",
    "Rat",
    "ScanReport",
    "Span",
    "StepFn",
    "StepFnError",
    "as_rat",
    "aux_frequency",
    "band_extent",
    "build_profile",
    "check_profile_invariants",
    "closed_form_frequency",
    "closed_form_maximal",
    "continuity_certificate",
    "discontinuities",
    "e_set",
    "emit_plot",
    "eval_average",
    "format_rational",
    "frequency",
    "generate",
    "high_side_collapse",
    "inv_pow2",
    "lebesgue_classify",
    "level_density",
    "local_limit",
    "maximal",
    "non_lebesgue_witnesses",
    "oracle_eval",
    "parse_rational",
    "parse_stepfn",
    "scan",
    "serialize_stepfn",
    "weak_type_check",
    "zero_frequency_witnesses",
    "zero_set_fraction",
]
