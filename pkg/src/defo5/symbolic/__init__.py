"""Exact symbolic verification of the coefficient extraction behind the
universality proof: expansion of both sides of the conjugation identity in
t over a rational function field with two adjoined surds."""

from .coefficients import (consistency_sample, displayed_eq3, displayed_eq4,
                           displayed_third_order, expand_lhs, expand_rhs,
                           inner_series, verify_displayed_equations)
from .surd import SYMBOLS, A0, A1, A2, A3, Y1, Y2, SurdError, SurdExpression

__all__ = [
    "A0", "A1", "A2", "A3", "SYMBOLS", "SurdError", "SurdExpression",
    "Y1", "Y2", "consistency_sample", "displayed_eq3", "displayed_eq4",
    "displayed_third_order", "expand_lhs", "expand_rhs", "inner_series",
    "verify_displayed_equations",
]
