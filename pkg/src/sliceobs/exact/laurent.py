"""
Laurent polynomials over Q, the fraction field Q(t), and the torsion
quotient Q(t)/Q[t, t^-1].

All three types are immutable.  Coefficients are stored as
:class:`fractions.Fraction`; integrality is a property, not a separate type.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational


def _frac(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"cannot use {c!r} as a rational coefficient")


def _fmt_coeff(c):
    if c.denominator == 1:
        return str(c.numerator)
    return f"({c.numerator}/{c.denominator})"


class LaurentPolynomial:
    """An element of Q[t, t^-1], stored as a sparse map exponent -> coefficient."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=None):
        c = {}
        if coeffs is None:
            pass
        elif isinstance(coeffs, LaurentPolynomial):
            c = dict(coeffs._c)
        elif isinstance(coeffs, dict):
            for k, v in coeffs.items():
                v = _frac(v)
                if v:
                    c[int(k)] = v
        else:
            # ascending coefficient list starting at exponent 0
            for k, v in enumerate(coeffs):
                v = _frac(v)
                if v:
                    c[k] = v
        self._c = c
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def _raw(cls, c):
        p = object.__new__(cls)
        p._c = c
        p._hash = None
        return p

    @classmethod
    def constant(cls, c):
        return cls({0: c})

    @classmethod
    def monomial(cls, c=1, k=1):
        return cls({k: c})

    @classmethod
    def coerce(cls, x):
        if isinstance(x, LaurentPolynomial):
            return x
        return cls({0: x})

    # -- basic structure --------------------------------------------------
    @property
    def terms(self):
        """Sorted list of (exponent, coefficient) pairs, ascending."""
        return sorted(self._c.items())

    def coeff(self, k):
        return self._c.get(k, Fraction(0))

    def __bool__(self):
        return bool(self._c)

    def is_zero(self):
        return not self._c

    @property
    def low(self):
        if not self._c:
            raise ValueError("zero polynomial has no exponents")
        return min(self._c)

    @property
    def high(self):
        if not self._c:
            raise ValueError("zero polynomial has no exponents")
        return max(self._c)

    @property
    def span(self):
        """Degree after clearing units: high - low.  This is the Euclidean norm."""
        return self.high - self.low

    @property
    def degree(self):
        return self.high if self._c else -1

    @property
    def lc(self):
        return self._c[self.high]

    @property
    def tc(self):
        return self._c[self.low]

    def is_unit(self):
        return len(self._c) == 1

    def is_constant(self):
        return not self._c or (len(self._c) == 1 and 0 in self._c)

    def is_integral(self):
        return all(v.denominator == 1 for v in self._c.values())

    def is_polynomial(self):
        return not self._c or self.low >= 0

    def coefficients(self):
        """Dense ascending coefficients from exponent ``low`` to ``high``."""
        if not self._c:
            return []
        lo, hi = self.low, self.high
        return [self._c.get(k, Fraction(0)) for k in range(lo, hi + 1)]

    # -- arithmetic ---------------------------------------------------------
    def __neg__(self):
        return LaurentPolynomial._raw({k: -v for k, v in self._c.items()})

    def __add__(self, other):
        if not isinstance(other, LaurentPolynomial):
            try:
                other = LaurentPolynomial.coerce(other)
            except TypeError:
                return NotImplemented
        c = dict(self._c)
        for k, v in other._c.items():
            s = c.get(k, 0) + v
            if s:
                c[k] = s
            else:
                c.pop(k, None)
        return LaurentPolynomial._raw(c)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, LaurentPolynomial):
            try:
                other = LaurentPolynomial.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentPolynomial):
            if isinstance(other, (int, Rational)):
                other = _frac(other)
                if not other:
                    return LaurentPolynomial()
                return LaurentPolynomial._raw({k: v * other for k, v in self._c.items()})
            return NotImplemented
        c = {}
        for i, a in self._c.items():
            for j, b in other._c.items():
                c[i + j] = c.get(i + j, 0) + a * b
        return LaurentPolynomial._raw({k: v for k, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if not self.is_unit():
                raise ValueError("only units have negative powers")
            (k, c), = self._c.items()
            return LaurentPolynomial({k * n: c ** n})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, LaurentPolynomial):
            return self._c == other._c
        if isinstance(other, (int, Rational)):
            return self._c == LaurentPolynomial.constant(other)._c
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __call__(self, x):
        """Evaluate at ``x`` (any field element supporting ``**`` with negative ints)."""
        total = 0
        for k, v in self._c.items():
            total += v * x ** k
        return total

    # -- unit handling --------------------------------------------------------
    def shift(self, k):
        """Multiply by t^k."""
        return LaurentPolynomial._raw({e + k: v for e, v in self._c.items()})

    def conj(self):
        """The involution t -> t^-1."""
        return LaurentPolynomial._raw({-e: v for e, v in self._c.items()})

    def normalize(self):
        """Unit-normalised form: lowest exponent 0, positive leading coefficient."""
        if not self._c:
            return self
        p = self.shift(-self.low)
        return -p if p.lc < 0 else p

    def monic(self):
        """Lowest exponent 0 and leading coefficient 1."""
        if not self._c:
            return self
        p = self.shift(-self.low)
        return p * (1 / p.lc)

    def unit_part(self):
        """The unit ``u = c t^k`` with ``self == u * self.monic()``."""
        return LaurentPolynomial({self.low: self.lc})

    def associated(self, other):
        """Equality up to multiplication by a unit c t^k."""
        return self.monic() == LaurentPolynomial.coerce(other).monic()

    # -- Euclidean structure -------------------------------------------------
    def poly_divmod(self, other):
        """Ordinary polynomial division; both operands must be polynomials."""
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        if not self.is_polynomial() or not other.is_polynomial():
            raise ValueError("poly_divmod needs ordinary polynomials")
        r = dict(self._c)
        q = {}
        dg = other.high
        lc = other.lc
        oterms = list(other._c.items())
        while r:
            hr = max(r)
            if hr < dg:
                break
            f = r[hr] / lc
            s = hr - dg
            q[s] = f
            for k, v in oterms:
                e = k + s
                nv = r.get(e, 0) - f * v
                if nv:
                    r[e] = nv
                else:
                    r.pop(e, None)
        return LaurentPolynomial._raw(q), LaurentPolynomial._raw(r)

    def __divmod__(self, other):
        """Euclidean division in Q[t, t^-1] with norm ``span``.

        Returns (q, r) with self = q*other + r and r == 0 or r.span < other.span.
        """
        other = LaurentPolynomial.coerce(other)
        if not other:
            raise ZeroDivisionError("Laurent division by zero")
        if not self:
            return LaurentPolynomial(), LaurentPolynomial()
        i, j = self.low, other.low
        q0, r0 = self.shift(-i).poly_divmod(other.shift(-j))
        return q0.shift(i - j), r0.shift(i)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        other = LaurentPolynomial.coerce(other)
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def divides(self, other):
        if not self:
            return not other
        return not (LaurentPolynomial.coerce(other) % self)

    def derivative(self):
        return LaurentPolynomial._raw({k - 1: v * k for k, v in self._c.items() if k})

    # -- text -----------------------------------------------------------------
    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for k in sorted(self._c, reverse=True):
            c = self._c[k]
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            if k == 0:
                mono = ""
            elif k == 1:
                mono = "t"
            else:
                mono = f"t^{k}"
            if mono and a == 1:
                body = mono
            else:
                body = _fmt_coeff(a) + mono
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"LaurentPolynomial({str(self)!r})"

    _TERM = re.compile(
        r"\s*([+-])?\s*(?:(\d+)|\((-?\d+)/(\d+)\))?\s*(t(?:\^(-?\d+))?)?\s*")

    @classmethod
    def parse(cls, text):
        """Parse the format produced by ``str``."""
        text = text.strip()
        if text == "0":
            return cls()
        pos = 0
        c = {}
        first = True
        while pos < len(text):
            m = cls._TERM.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse polynomial at position {pos}: {text!r}")
            sign, whole, num, den, mono, exp = m.groups()
            if sign is None and not first:
                raise ValueError(f"missing sign at position {pos}: {text!r}")
            if whole is None and num is None and mono is None:
                raise ValueError(f"empty term at position {pos}: {text!r}")
            if whole is not None:
                coef = Fraction(int(whole))
            elif num is not None:
                coef = Fraction(int(num), int(den))
            else:
                coef = Fraction(1)
            if sign == "-":
                coef = -coef
            k = 0 if mono is None else (1 if exp is None else int(exp))
            c[k] = c.get(k, 0) + coef
            pos = m.end()
            first = False
        return cls(c)


def _fmt_fraction(num, den):
    a = str(num) if len(num.terms) == 1 else f"({num})"
    b = str(den) if len(den.terms) == 1 else f"({den})"
    return f"{a}/{b}"


ZERO = LaurentPolynomial()
ONE = LaurentPolynomial({0: 1})
T = LaurentPolynomial({1: 1})


def poly_gcd(a, b):
    """Monic gcd in Q[t, t^-1] (lowest exponent 0).  gcd(0, 0) = 0."""
    a = LaurentPolynomial.coerce(a)
    b = LaurentPolynomial.coerce(b)
    if a:
        a = a.monic()
    if b:
        b = b.monic()
    while b:
        a, b = b, (a.poly_divmod(b)[1])
        if b:
            b = b.monic()
    return a.monic() if a else a


def poly_xgcd(a, b):
    """Return (g, s, u) with s*a + u*b = g, g the monic gcd.  Polynomial inputs."""
    r0, r1 = a, b
    s0, s1 = ONE, ZERO
    u0, u1 = ZERO, ONE
    while r1:
        q, r = r0.poly_divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        u0, u1 = u1, u0 - q * u1
    if not r0:
        return r0, s0, u0
    inv = 1 / r0.lc
    return r0 * inv, s0 * inv, u0 * inv


def poly_lcm(a, b):
    if not a or not b:
        return ZERO
    return (a * b).exact_div(poly_gcd(a, b)).monic()


def reduce_mod(g, f):
    """Reduce the Laurent polynomial ``g`` modulo ``f``.

    ``f`` must be a polynomial with nonzero constant term, so t is invertible
    modulo f.  Returns the polynomial representative of degree < deg f.
    """
    if not f:
        raise ZeroDivisionError("reduction modulo zero")
    if f.low != 0:
        f = f.shift(-f.low)
    if f.high == 0:
        return ZERO
    if not g:
        return g
    lo = g.low
    if lo >= 0:
        return g.poly_divmod(f)[1]
    # t^-1 = -(f - f(0)) / (f(0) t)  (mod f)
    c0 = f.coeff(0)
    t_inv = (f - c0).shift(-1) * (-1 / c0)
    head = g.shift(-lo)
    r = head.poly_divmod(f)[1]
    step = t_inv
    n = -lo
    while n:
        if n & 1:
            r = (r * step).poly_divmod(f)[1]
        step = (step * step).poly_divmod(f)[1]
        n >>= 1
    return r


class RationalFunction:
    """An element of Q(t) in lowest terms.

    The denominator is monic with lowest exponent 0; any unit factor is moved
    into the numerator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        num = LaurentPolynomial.coerce(num)
        den = LaurentPolynomial.coerce(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            self.num, self.den = ZERO, ONE
            return
        unit = den.unit_part()
        (k, c), = unit._c.items()
        num = num.shift(-k) * (1 / c)
        den = den.monic()
        g = poly_gcd(num.shift(-num.low), den)
        if g.span > 0:
            num = num.exact_div(g)
            den = den.exact_div(g).monic()
        self.num, self.den = num, den

    @classmethod
    def coerce(cls, x):
        if isinstance(x, RationalFunction):
            return x
        return cls(LaurentPolynomial.coerce(x))

    def __add__(self, other):
        other = RationalFunction.coerce(other)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        r = object.__new__(RationalFunction)
        r.num, r.den = -self.num, self.den
        return r

    def __sub__(self, other):
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other):
        return RationalFunction.coerce(other) - self

    def __mul__(self, other):
        other = RationalFunction.coerce(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RationalFunction.coerce(other)
        if not other.num:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def conj(self):
        return RationalFunction(self.num.conj(), self.den.conj())

    def residue_class(self):
        return RationalFunctionClass(self.num, self.den)

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return _fmt_fraction(self.num, self.den)

    __repr__ = __str__


class RationalFunctionClass:
    """A residue class in Q(t)/Q[t, t^-1].

    Canonical representative num/den: den monic with nonzero constant term,
    num a polynomial with deg num < deg den, gcd(num, den) = 1.  The zero
    class is 0/1.  Equality of classes is equality of representatives.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        num = LaurentPolynomial.coerce(num)
        den = LaurentPolynomial.coerce(den)
        if not den:
            raise ZeroDivisionError("class with zero denominator")
        unit = den.unit_part()
        (k, c), = unit._c.items()
        num = num.shift(-k) * (1 / c)
        den = den.monic()
        num = reduce_mod(num, den)
        if not num:
            self.num, self.den = ZERO, ONE
            return
        g = poly_gcd(num, den)
        if g.span > 0:
            num = num.exact_div(g)
            den = den.exact_div(g).monic()
        self.num, self.den = num, den

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def __add__(self, other):
        if isinstance(other, (int, Rational, LaurentPolynomial)):
            return self
        if not isinstance(other, RationalFunctionClass):
            return NotImplemented
        return RationalFunctionClass(self.num * other.den + other.num * self.den,
                                     self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        r = object.__new__(RationalFunctionClass)
        r.num, r.den = -self.num, self.den
        return r

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """Scalar multiplication by an element of Q[t, t^-1]."""
        if isinstance(other, (int, Rational, LaurentPolynomial)):
            return RationalFunctionClass(self.num * other, self.den)
        return NotImplemented

    __rmul__ = __mul__

    def conj(self):
        return RationalFunctionClass(self.num.conj(), self.den.conj())

    def __eq__(self, other):
        if isinstance(other, RationalFunctionClass):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Rational, LaurentPolynomial)):
            return not self.num
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if not self.num:
            return "0"
        return _fmt_fraction(self.num, self.den)

    def __repr__(self):
        return f"RationalFunctionClass({str(self)!r})"
