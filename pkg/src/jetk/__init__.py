"""Exact calculator for K-classes and splitting types of jet bundles on P^N."""

from .exact_arith import LaurentPoly, NotInvertibleError, TruncPoly, binom
from .jetcalc import (
    InapplicableError,
    JetSpec,
    connection_obstruction,
    jet_class,
    left_splitting_first_order,
    prove_non_isomorphic,
    right_decomposition_first_order,
    verify_ktheory_equality,
)
from .kring import (
    KClass,
    LineBundleSum,
    class_of_twist,
    cohomology_dim,
    deg_rk,
    sum_to_class,
    sym_omega,
    sym_power,
    wedge_power,
)
from .p1lab import (
    CechOneForm,
    LaurentMatrix,
    NotATransitionError,
    SplittingType,
    atiyah_class_p1,
    birkhoff_split,
    h0_count,
    jet_transition,
    matrix_from_text,
    splitting_via_h0,
    verify_corr_p1,
)
from .report import INAPPLICABLE, REFUTED, VERIFIED, Report, Step
from .sheafdsl import EvaluationError, ParseError, RangeError, evaluate, parse, print_expr

__all__ = [
    "binom",
    "TruncPoly",
    "LaurentPoly",
    "NotInvertibleError",
    "KClass",
    "LineBundleSum",
    "class_of_twist",
    "sum_to_class",
    "deg_rk",
    "sym_power",
    "wedge_power",
    "sym_omega",
    "cohomology_dim",
    "JetSpec",
    "InapplicableError",
    "jet_class",
    "left_splitting_first_order",
    "right_decomposition_first_order",
    "verify_ktheory_equality",
    "prove_non_isomorphic",
    "connection_obstruction",
    "LaurentMatrix",
    "SplittingType",
    "CechOneForm",
    "NotATransitionError",
    "jet_transition",
    "birkhoff_split",
    "h0_count",
    "splitting_via_h0",
    "atiyah_class_p1",
    "verify_corr_p1",
    "matrix_from_text",
    "Report",
    "Step",
    "VERIFIED",
    "REFUTED",
    "INAPPLICABLE",
    "parse",
    "print_expr",
    "evaluate",
    "ParseError",
    "RangeError",
    "EvaluationError",
]
