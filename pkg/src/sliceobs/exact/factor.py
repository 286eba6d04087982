"""
Partial factorisation over Q: squarefree split, rational roots, and an
irreducibility certificate for the low-degree remainder.

Rootless remainders of degree 2 or 3 are certified irreducible (a reducible
polynomial of degree <= 3 has a linear factor).  Anything of degree >= 4
without rational roots is returned with ``resolved=False``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import InvalidInputError
from .laurent import LaurentPolynomial, poly_gcd


@dataclass(frozen=True)
class Factor:
    poly: LaurentPolynomial
    multiplicity: int
    resolved: bool = True


@dataclass(frozen=True)
class Factorization:
    """``unit * prod(f.poly ** f.multiplicity)``; every ``f.poly`` is monic."""

    unit: LaurentPolynomial
    factors: tuple = field(default_factory=tuple)

    @property
    def resolved(self):
        return all(f.resolved for f in self.factors)

    def expand(self):
        p = self.unit
        for f in self.factors:
            p = p * f.poly ** f.multiplicity
        return p

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)


def squarefree_decomposition(f):
    """Yun's algorithm.  ``f`` monic polynomial; returns [(s_i, i)] with s_i != 1."""
    out = []
    df = f.derivative()
    a = poly_gcd(f, df)
    b = f.exact_div(a)
    c = df.exact_div(a)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = b.exact_div(a).monic()
        c = d.exact_div(a)
        d = c - b.derivative()
        i += 1
    return out


def _divisors(n):
    n = abs(n)
    small = [i for i in range(1, math.isqrt(n) + 1) if n % i == 0]
    return sorted(set(small + [n // i for i in small]))


def _integer_primitive(f):
    coeffs = f.coefficients()
    den = math.lcm(*(c.denominator for c in coeffs))
    ints = [int(c * den) for c in coeffs]
    g = math.gcd(*ints)
    return [x // g for x in ints]


def rational_roots(f):
    """Rational roots of a polynomial with nonzero constant term, ascending."""
    if f.degree <= 0:
        return []
    ints = _integer_primitive(f)
    a0, an = ints[0], ints[-1]
    if a0 == 0:
        raise ValueError("rational_roots expects a nonzero constant term")
    n = len(ints) - 1
    f1 = sum(ints)
    fm1 = sum(c if i % 2 == 0 else -c for i, c in enumerate(ints))
    roots = set()
    for q in _divisors(an):
        for p in _divisors(a0):
            for s in (p, -p):
                if math.gcd(s, q) != 1:
                    continue
                # a root s/q forces (q - s) | f(1) and (q + s) | f(-1)
                if (q - s and f1 % (q - s)) or (q + s and fm1 % (q + s)):
                    continue
                if sum(c * s ** i * q ** (n - i) for i, c in enumerate(ints)) == 0:
                    roots.add(Fraction(s, q))
    return sorted(roots)


def _is_rational_square(x):
    if x < 0:
        return False
    n, d = x.numerator, x.denominator
    return math.isqrt(n) ** 2 == n and math.isqrt(d) ** 2 == d


def discriminant_quadratic(f):
    c, b, a = f.coefficients()
    return b * b - 4 * a * c


def factor_over_rationals(f):
    """Factor a nonzero Laurent polynomial over Q within the partial scope above."""
    f = LaurentPolynomial.coerce(f)
    if not f:
        raise InvalidInputError("cannot factor the zero polynomial")
    unit = f.unit_part()
    g = f.monic()
    factors = []
    if g.degree == 0:
        return Factorization(unit, ())
    for s, mult in squarefree_decomposition(g):
        rest = s
        for x in rational_roots(s):
            lin = LaurentPolynomial({0: -x, 1: 1})
            factors.append(Factor(lin, mult))
            rest = rest.exact_div(lin).monic()
        deg = rest.degree
        if deg <= 0:
            continue
        if deg == 2:
            # no rational roots left, so the discriminant is not a rational square
            assert not _is_rational_square(discriminant_quadratic(rest))
            factors.append(Factor(rest, mult))
        elif deg == 3:
            factors.append(Factor(rest, mult))
        else:
            factors.append(Factor(rest, mult, resolved=False))
    factors.sort(key=lambda fc: (fc.poly.degree, [c for c in fc.poly.coefficients()]))
    return Factorization(unit, tuple(factors))
