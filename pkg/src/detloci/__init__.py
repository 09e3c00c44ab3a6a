"""Degree-theoretic invariants, rule checks and Groebner oracles for
determinantal loci W(b;a) in the Hilbert scheme of P^n."""

from .checker import Guarantee, Report, Verdict, analyze
from .combinatorics import K_term, K_term_oracle, conjectured_dim, ell, h_index, invariants, lambda_c
from .degrees import CharFlag, DegreeSpec, is_nonempty, validate
from .errors import (
    BadAmbient,
    BadLength,
    BudgetExceeded,
    DetlociError,
    EmptyFamily,
    HypothesisViolated,
    InputError,
    NotApplicable,
    NotCodimC,
    ShapeError,
    TrivialCase,
    UnsortedInput,
)
from .resolution import BettiTable, HilbertPoly, en_betti_table, hilbert_function, hilbert_polynomial

__version__ = "0.1.0"

__all__ = [
    "BadAmbient", "BadLength", "BettiTable", "BudgetExceeded", "CharFlag", "DegreeSpec",
    "DetlociError", "EmptyFamily", "Guarantee", "HilbertPoly", "HypothesisViolated",
    "InputError", "K_term", "K_term_oracle", "NotApplicable", "NotCodimC", "Report",
    "ShapeError", "TrivialCase", "UnsortedInput", "Verdict", "analyze", "conjectured_dim",
    "ell", "en_betti_table", "h_index", "hilbert_function", "hilbert_polynomial",
    "invariants", "is_nonempty", "lambda_c", "validate",
]
