"""Sylvester resultants of univariate polynomials."""

from __future__ import annotations

from fractions import Fraction

from ..errors import InvalidInputError
from .laurent import LaurentPolynomial
from .linalg import det


def sylvester_matrix(f, g):
    """Sylvester matrix: deg g shifted rows of f, then deg f shifted rows of g.

    Coefficients are listed by descending exponent.  With this ordering the
    determinant is lc(f)^deg(g) * prod g(alpha) over the roots alpha of f.
    """
    n, m = f.degree, g.degree
    fc = list(reversed(f.coefficients()))
    gc = list(reversed(g.coefficients()))
    size = n + m
    rows = []
    for i in range(m):
        rows.append([Fraction(0)] * i + fc + [Fraction(0)] * (size - n - 1 - i))
    for i in range(n):
        rows.append([Fraction(0)] * i + gc + [Fraction(0)] * (size - m - 1 - i))
    return rows


def resultant(f, g):
    """Res(f, g) after clearing unit factors t^k from both arguments.

    Returns an ``int`` when the value is integral, else a ``Fraction``.
    The sign follows :func:`sylvester_matrix`; callers that only need
    |Res| are unaffected by the ordering convention.
    """
    f = LaurentPolynomial.coerce(f)
    g = LaurentPolynomial.coerce(g)
    if not f or not g:
        raise InvalidInputError("undefined resultant: zero polynomial")
    f = f.shift(-f.low)
    g = g.shift(-g.low)
    r = det(sylvester_matrix(f, g))
    return int(r) if r.denominator == 1 else r
