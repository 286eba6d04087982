"""Exact arithmetic kernel."""

from .factor import Factor, Factorization, factor_over_rationals
from .intmat import AbelianGroup, SmithForm, det_int, kron, smith_normal_form_int
from .laurent import (
    ONE,
    T,
    ZERO,
    LaurentPolynomial,
    RationalFunction,
    RationalFunctionClass,
    poly_gcd,
    reduce_mod,
)
from .laurent_matrix import (
    LaurentSmithForm,
    det_laurent,
    invert_over_fraction_field,
    smith_normal_form_laurent,
)
from .resultant import resultant, sylvester_matrix

__all__ = [
    "ONE", "T", "ZERO",
    "AbelianGroup", "Factor", "Factorization", "LaurentPolynomial",
    "LaurentSmithForm", "RationalFunction", "RationalFunctionClass", "SmithForm",
    "det_int", "det_laurent", "factor_over_rationals", "invert_over_fraction_field",
    "kron", "poly_gcd", "reduce_mod", "resultant", "smith_normal_form_int",
    "smith_normal_form_laurent", "sylvester_matrix",
]
