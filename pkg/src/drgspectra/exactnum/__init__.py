"""Exact arithmetic kernel: big rationals, integer polynomials and real
algebraic numbers (Sturm-isolated), plus number-field arithmetic."""

from fractions import Fraction as BigRational

from .polynomials import IntPolynomial, format_poly
from .algebraic import (
    AlgebraicReal,
    isolate_real_roots,
    sign_at,
    simplest_in_interval,
    sturm_chain,
)
from .numberfield import FieldElement, NumberField

__all__ = [
    "BigRational",
    "IntPolynomial",
    "format_poly",
    "AlgebraicReal",
    "isolate_real_roots",
    "sign_at",
    "simplest_in_interval",
    "sturm_chain",
    "FieldElement",
    "NumberField",
]
