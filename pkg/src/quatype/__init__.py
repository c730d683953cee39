"""Exact Clifford algebra arithmetic with a mod-4 grading layer.

The package has three levels: a blade kernel (`blades`), sparse multivector
arithmetic over it (`multivector`), and the mod-4 type layer with its
composition tables, subspace patterns, and verification harness (`qtype`,
`verify`).  `exprio` and `cli` provide text and JSON interfaces.
"""

from .blades import Signature, blade_indices, canonical_sign, grade, mask_from_indices
from .multivector import (
    AlgebraError,
    ConvergenceFailure,
    Field,
    FieldMismatch,
    Multivector,
    RankOutOfRange,
    SignatureMismatch,
)
from .qtype import (
    CoeffClass,
    EMPTY_TYPE,
    FULL_TYPE,
    OpKind,
    QType,
    SubspacePattern,
    TYPE_ORDER,
    detect_qtype,
    emit_table,
    is_closed,
    main_compose,
    pattern_compose,
    pattern_of,
    qtype_compose,
)
from .exprio import (
    ExprSyntaxError,
    format_expression,
    mv_from_document,
    mv_to_document,
    parse_expression,
)
from .verify import (
    CheckConfig,
    CheckReport,
    CheckStatus,
    Counterexample,
    SplitMix64,
    Strategy,
    UnknownCheck,
    WC_PATTERN,
    check_grade_pattern,
    check_pattern_closure,
    check_quaternion_axioms,
    check_rank_coincidence,
    check_subalgebra_theorems,
    check_theorem5,
    check_theorem6,
    check_theorem6_7,
    check_theorem7,
    check_type_table,
    check_wc_membership,
    is_in_wc,
    is_pseudo_unitary,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "CheckConfig",
    "CheckReport",
    "CheckStatus",
    "CoeffClass",
    "ConvergenceFailure",
    "Counterexample",
    "EMPTY_TYPE",
    "ExprSyntaxError",
    "FULL_TYPE",
    "Field",
    "FieldMismatch",
    "Multivector",
    "OpKind",
    "QType",
    "RankOutOfRange",
    "Signature",
    "SignatureMismatch",
    "SplitMix64",
    "Strategy",
    "SubspacePattern",
    "TYPE_ORDER",
    "UnknownCheck",
    "WC_PATTERN",
    "blade_indices",
    "canonical_sign",
    "check_grade_pattern",
    "check_pattern_closure",
    "check_quaternion_axioms",
    "check_rank_coincidence",
    "check_subalgebra_theorems",
    "check_theorem5",
    "check_theorem6",
    "check_theorem6_7",
    "check_theorem7",
    "check_type_table",
    "check_wc_membership",
    "detect_qtype",
    "emit_table",
    "format_expression",
    "grade",
    "is_closed",
    "is_in_wc",
    "is_pseudo_unitary",
    "main_compose",
    "mask_from_indices",
    "mv_from_document",
    "mv_to_document",
    "parse_expression",
    "pattern_compose",
    "pattern_of",
    "qtype_compose",
    "run_suite",
]
