"""Boole's original algebra of elective symbols.

Expressions over class symbols are developed into constituent normal
form by exact pointwise evaluation; equations are solved for an unknown
by formal division with interpretation of 0/0 and k/0 coefficients;
symbols are eliminated through the classical residual; and everything is
checkable against an exhaustive finite-set oracle.  A small companion
module provides the modern {0,1} operations and reports exactly where
the original + and - leave them.
"""

from .errors import (
    ElectiveError,
    EmptyPremises,
    EmptySymbolList,
    InvalidFlags,
    InvalidSymbolList,
    NameCollision,
    NotInterpretable,
    ParseError,
    QuotientInOracle,
    SymbolLimitExceeded,
    SymbolListMismatch,
    SymbolNotPresent,
    UninterpretableNesting,
    UniverseLimitExceeded,
)
from .expr import (
    Add,
    Compl,
    Const,
    Equation,
    Expr,
    Mul,
    ONE,
    Quot,
    Sub,
    Sym,
    Symbol,
    ZERO,
    as_expr,
    contains_quotient,
    desugar_complements,
    format_expr,
    free_symbols,
    substitute,
    symbols,
)
from .algebra import (
    Coeff,
    Constituent,
    INDETERMINATE,
    Indeterminate,
    Infinite,
    LinearForm,
    MAX_SYMBOLS,
    coeff_factor_text,
    coeff_text,
    constituents,
    display_order,
    eval_at,
    expand,
    format_linear_form,
    normal_form,
)
from .parsing import parse_equation, parse_expression
from .inference import (
    EliminationResult,
    SolvedClass,
    combine_premises,
    eliminate,
    solve_for,
    syllogism,
)
from .oracle import (
    Counterexample,
    MAX_UNIVERSE,
    SetAssignment,
    Universe,
    VerificationReport,
    assignments,
    enumerate_solutions,
    eval_numeric,
    holds,
    region,
    submasks,
    verify_solved,
)
from .modern import DivergenceReport, analyze, b_and, b_not, b_or
from .nyaya import (
    KotiRegion,
    ThreeVal,
    catuskoti_classify,
    negate3,
    negation_table,
)

__version__ = "0.1.0"

__all__ = [
    "Add",
    "Coeff",
    "Compl",
    "Const",
    "Constituent",
    "Counterexample",
    "DivergenceReport",
    "ElectiveError",
    "EliminationResult",
    "EmptyPremises",
    "EmptySymbolList",
    "Equation",
    "Expr",
    "INDETERMINATE",
    "Indeterminate",
    "Infinite",
    "InvalidFlags",
    "InvalidSymbolList",
    "KotiRegion",
    "LinearForm",
    "MAX_SYMBOLS",
    "MAX_UNIVERSE",
    "Mul",
    "NameCollision",
    "NotInterpretable",
    "ONE",
    "ParseError",
    "Quot",
    "QuotientInOracle",
    "SetAssignment",
    "SolvedClass",
    "Sub",
    "Sym",
    "Symbol",
    "SymbolLimitExceeded",
    "SymbolListMismatch",
    "SymbolNotPresent",
    "ThreeVal",
    "UninterpretableNesting",
    "Universe",
    "UniverseLimitExceeded",
    "VerificationReport",
    "ZERO",
    "analyze",
    "as_expr",
    "assignments",
    "b_and",
    "b_not",
    "b_or",
    "catuskoti_classify",
    "coeff_factor_text",
    "coeff_text",
    "combine_premises",
    "constituents",
    "contains_quotient",
    "desugar_complements",
    "display_order",
    "eliminate",
    "enumerate_solutions",
    "eval_at",
    "eval_numeric",
    "expand",
    "format_expr",
    "format_linear_form",
    "free_symbols",
    "holds",
    "negate3",
    "negation_table",
    "normal_form",
    "parse_equation",
    "parse_expression",
    "region",
    "solve_for",
    "submasks",
    "substitute",
    "syllogism",
    "symbols",
    "verify_solved",
]
