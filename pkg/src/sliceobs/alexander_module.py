"""
The rational Alexander module Q[t, t^-1]^{2g} / (tV - V^T), its Blanchfield
pairing, and the lattice of t-invariant subspaces used to find metabolisers.

Conventions
-----------
* Relations are the columns of ``tV - V^T``.
* The module is identified with a Q-vector space through the Laurent Smith
  form ``U (tV - V^T) W = diag(d_1, ..., d_n)``: a vector ``v`` maps to
  ``U v``, whose k-th entry is reduced modulo ``d_k``.  The Q-basis is
  ``t^0, ..., t^{deg d_k - 1}`` in every summand with ``deg d_k > 0``.
* The Blanchfield gram on the generators is ``(t - 1)(tV - V^T)^-1`` and
  ``Bl(x, y) = sum_ij conj(x_i) y_j gram[i][j]``.  With column relations this
  is the well-defined choice: it is conjugate-linear in the first argument
  and linear in the second, so ``Bl(e_i, e_j) = gram[i][j]``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInputError, UnsupportedComputationError, VerificationError
from .exact import linalg
from .exact.factor import factor_over_rationals
from .exact.laurent import (
    ONE,
    ZERO,
    LaurentPolynomial,
    RationalFunctionClass,
    poly_lcm,
    reduce_mod,
)
from .exact.laurent_matrix import (
    det_laurent,
    invert_over_fraction_field,
    lmatvec,
    smith_normal_form_laurent,
)
from .seifert import alexander_polynomial, presentation_matrix, validate_seifert

T = LaurentPolynomial.monomial(1, 1)


class MetaboliserLookupError(UnsupportedComputationError, LookupError):
    """No metaboliser, or more than one, contains the requested element."""


@dataclass(frozen=True)
class PrimaryComponent:
    factor: LaurentPolynomial
    multiplicity: int
    generators: tuple
    resolved: bool = True

    @property
    def q_dimension(self):
        return self.factor.degree * self.multiplicity


class RationalAlexanderModule:
    """H_1 of the infinite cyclic cover with Q coefficients, as a Q-vector space with t-action."""

    def __init__(self, V):
        self.source = validate_seifert(V)
        n = self.source.size
        self.alexander_polynomial = alexander_polynomial(self.source)
        self.factorization = factor_over_rationals(self.alexander_polynomial)
        if n == 0:
            self.snf = None
            self._summands = []
        else:
            self.snf = smith_normal_form_laurent(presentation_matrix(self.source))
            self._summands = [(k, d) for k, d in enumerate(self.snf.factors) if d.span > 0]
        self._offsets = []
        off = 0
        for _, d in self._summands:
            self._offsets.append(off)
            off += d.degree
        self.q_dimension = off
        self.invariant_factors = [d for _, d in self._summands]
        self.q_basis = [tuple(Fraction(int(i == j)) for j in range(off)) for i in range(off)]
        self.t_action = self._companion()
        self.generator_classes = [self.coords(self._unit_vector(i)) for i in range(n)]
        self.primary_decomposition = self._primary()
        self.primary_complete = self.factorization.resolved

    # -- coordinates ----------------------------------------------------------
    def _unit_vector(self, i):
        return [ONE if j == i else ZERO for j in range(self.source.size)]

    def _companion(self):
        D = self.q_dimension
        Tm = [[Fraction(0)] * D for _ in range(D)]
        for off, (_, d) in zip(self._offsets, self._summands):
            n = d.degree
            for i in range(n - 1):
                Tm[off + i + 1][off + i] = Fraction(1)
            for i in range(n):
                Tm[off + i][off + n - 1] = -d.coeff(i)
        return Tm

    def coords(self, v):
        """Q-coordinates of a vector of Laurent polynomials (a combination of generators)."""
        if self.q_dimension == 0:
            return ()
        v = [LaurentPolynomial.coerce(x) for x in v]
        return self._from_smith(lmatvec(self.snf.U, v))

    def _from_smith(self, w):
        out = []
        for (k, d) in self._summands:
            r = reduce_mod(w[k], d)
            out.extend(r.coeff(i) for i in range(d.degree))
        return tuple(out)

    def _block_polys(self, x):
        polys = []
        for off, (_, d) in zip(self._offsets, self._summands):
            polys.append(LaurentPolynomial({i: x[off + i] for i in range(d.degree)}))
        return polys

    def lift(self, x):
        """A Laurent vector in Q[t^+-1]^{2g} representing the element with coordinates x."""
        self._check(x)
        n = self.source.size
        w = [ZERO] * n
        for (k, _), p in zip(self._summands, self._block_polys(x)):
            w[k] = p
        return lmatvec(self.snf.U_inv, w) if n else []

    def act(self, p, x):
        """The element p(t) * x for a Laurent polynomial p."""
        self._check(x)
        p = LaurentPolynomial.coerce(p)
        out = []
        for (_, d), q in zip(self._summands, self._block_polys(x)):
            r = reduce_mod(p * q, d)
            out.extend(r.coeff(i) for i in range(d.degree))
        return tuple(out)

    def _check(self, x):
        if len(x) != self.q_dimension:
            raise InvalidInputError(
                f"element has {len(x)} coordinates, module dimension is {self.q_dimension}")

    def zero(self):
        return tuple(Fraction(0) for _ in range(self.q_dimension))

    # -- structure --------------------------------------------------------------
    def is_cyclic(self):
        return len(self._summands) <= 1

    def characteristic_polynomial(self):
        D = self.q_dimension
        M = [[(T if i == j else ZERO) - self.t_action[i][j] for j in range(D)] for i in range(D)]
        return det_laurent(M)

    def annihilator(self, x):
        """Monic generator of the annihilator ideal of x (its t-minimal polynomial)."""
        self._check(x)
        krylov = [tuple(x)]
        while True:
            nxt = tuple(linalg.matvec(self.t_action, krylov[-1]))
            coeffs = linalg.solve_in_span(krylov, nxt)
            if coeffs is not None:
                c = {i: -a for i, a in enumerate(coeffs)}
                c[len(krylov)] = 1
                return LaurentPolynomial(c)
            krylov.append(nxt)

    def _primary(self):
        comps = []
        for fac in self.factorization.factors:
            gens = []
            for (k, d) in self._summands:
                v = 0
                rest = d
                while fac.poly.divides(rest):
                    rest = rest.exact_div(fac.poly)
                    v += 1
                if v:
                    w = [ZERO] * self.source.size
                    w[k] = rest
                    gens.append(self._from_smith(w))
            comps.append(PrimaryComponent(fac.poly, fac.multiplicity, tuple(gens), fac.resolved))
        return comps

    def whole(self):
        return Submodule.span(self, self.q_basis)

    def zero_submodule(self):
        return Submodule.span(self, [])


def build_module(V):
    return RationalAlexanderModule(V)


@dataclass(frozen=True, eq=False)
class Submodule:
    """A t-invariant Q-subspace, stored by its reduced row echelon basis."""

    module: RationalAlexanderModule
    basis: tuple

    @classmethod
    def span(cls, module, vectors):
        rows, _ = linalg.rref([list(v) for v in vectors]) if vectors else ([], [])
        return cls(module, tuple(tuple(r) for r in rows))

    @classmethod
    def generated_by(cls, module, elements):
        """The smallest submodule containing ``elements``."""
        basis = []
        frontier = [tuple(e) for e in elements]
        while frontier:
            v = frontier.pop()
            if not any(v) or linalg.in_span(basis, v):
                continue
            basis.append(v)
            frontier.append(tuple(linalg.matvec(module.t_action, v)))
        return cls.span(module, basis)

    @property
    def dimension(self):
        return len(self.basis)

    @property
    def q_spanning_set(self):
        return self.basis

    def contains(self, x):
        return linalg.in_span(list(self.basis), list(x))

    def is_t_invariant(self):
        return all(self.contains(linalg.matvec(self.module.t_action, b)) for b in self.basis)

    def __eq__(self, other):
        if not isinstance(other, Submodule):
            return NotImplemented
        return self.basis == other.basis

    def __hash__(self):
        return hash(self.basis)

    def __repr__(self):
        rows = [[str(x) for x in r] for r in self.basis]
        return f"Submodule(dim={self.dimension}, basis={rows})"


class BlanchfieldPairing:
    """Blanchfield form of a knot, built from the gram matrix (t-1)(tV - V^T)^-1."""

    def __init__(self, V, module=None):
        self.source = validate_seifert(V)
        if self.source.size == 0:
            self.gram = []
        else:
            inv = invert_over_fraction_field(presentation_matrix(self.source))
            tm1 = T - 1
            self.gram = [[(x * tm1).residue_class() for x in row] for row in inv]
        # the gram over one common denominator, so sums need a single reduction
        self._den = ONE
        for row in self.gram:
            for c in row:
                self._den = poly_lcm(self._den, c.den)
        self._nums = [[c.num * self._den.exact_div(c.den) for c in row] for row in self.gram]
        self.module = module if module is not None else RationalAlexanderModule(self.source)
        if not self.is_hermitian():
            raise VerificationError("Blanchfield gram is not Hermitian")
        self._basis_table = None
        self._table_vectors = None

    def is_hermitian(self):
        n = len(self.gram)
        return all(self.gram[i][j] == self.gram[j][i].conj()
                   for i in range(n) for j in range(n))

    def pair_vectors(self, x, y):
        """Bl on Laurent vectors in generator coordinates."""
        total = ZERO
        for i, xi in enumerate(x):
            if not xi:
                continue
            xc = LaurentPolynomial.coerce(xi).conj()
            for j, yj in enumerate(y):
                if yj and self._nums[i][j]:
                    total = total + self._nums[i][j] * (xc * yj)
        return RationalFunctionClass(total, self._den)

    @property
    def basis_table(self):
        """Bl(b_a, b_b) for the module's Q-basis."""
        if self._basis_table is None:
            # b = t^i g_k for Smith generators g_k, so Bl(t^i g_k, t^j g_l) = t^(j-i) Bl(g_k, g_l)
            M = self.module
            gens = [M.lift(M.q_basis[off]) for off in M._offsets]
            base = [[self.pair_vectors(gk, gl) for gl in gens] for gk in gens]
            index = [(k, i) for k, (_, d) in enumerate(M._summands) for i in range(d.degree)]
            self._basis_table = [[base[k][l] * T ** (j - i) for (l, j) in index]
                                 for (k, i) in index]
        return self._basis_table

    @property
    def table_vectors(self):
        """``basis_table`` entries as numerator coefficient vectors over the module exponent."""
        if self._table_vectors is None:
            self._table_vectors = [[self._class_vector(c) for c in row]
                                   for row in self.basis_table]
        return self._table_vectors

    def pair_numerator(self, x, y):
        """Coefficients of N with Bl(x, y) = N / E, E the last invariant factor."""
        W = self.table_vectors
        out = [Fraction(0)] * (self.module.invariant_factors[-1].degree)
        for a, xa in enumerate(x):
            if not xa:
                continue
            for b, yb in enumerate(y):
                if yb:
                    c = xa * yb
                    out = [o + c * w for o, w in zip(out, W[a][b])]
        return out

    def pair(self, x, y):
        """Bl(x, y) for module elements in Q-coordinates."""
        self.module._check(x)
        self.module._check(y)
        if not self.module.q_dimension:
            return RationalFunctionClass(ZERO)
        num = LaurentPolynomial(self.pair_numerator(x, y))
        return RationalFunctionClass(num, self.module.invariant_factors[-1])

    def _class_vector(self, c):
        """Coordinates of a class as a numerator over the module exponent."""
        E = self.module.invariant_factors[-1]
        if not c:
            return [Fraction(0)] * E.degree
        num = (c.num * E.exact_div(c.den)).poly_divmod(E)[1]
        return [num.coeff(i) for i in range(E.degree)]


def blanchfield_gram(V):
    return BlanchfieldPairing(V)


def bl_pair(module, pairing, x, y):
    if len(x) != module.q_dimension or len(y) != module.q_dimension:
        raise InvalidInputError("dimension mismatch")
    return pairing.pair(x, y)


def orthogonal_complement(module, pairing, P):
    """P^perp = {x : Bl(x, p) = 0 for all p in P}, by an exact linear solve over Q."""
    D = module.q_dimension
    if D == 0:
        return module.zero_submodule()
    if not P.basis:
        return module.whole()
    rows = []
    for p in P.basis:
        # column a: Bl(b_a, p) as a coefficient vector
        cols = [pairing.pair_numerator(e, p) for e in module.q_basis]
        for i in range(len(cols[0])):
            rows.append([cols[a][i] for a in range(D)])
    return Submodule.span(module, linalg.nullspace(rows, D))


def radical(module, pairing):
    return orthogonal_complement(module, pairing, module.whole())


def enumerate_submodules(module):
    """All t-invariant subspaces of a cyclic module: one per monic divisor of Delta."""
    if module.q_dimension == 0:
        return [module.zero_submodule()]
    if not module.is_cyclic():
        raise UnsupportedComputationError(
            "submodule lattice may be infinite; enumeration unsupported")
    if not module.factorization.resolved:
        raise UnsupportedComputationError("factorisation unavailable")
    facs = module.factorization.factors
    out = []
    for exps in itertools.product(*(range(f.multiplicity + 1) for f in facs)):
        h = ONE
        for f, e in zip(facs, exps):
            h = h * f.poly ** e
        out.append((exps, Submodule.span(module, [module.act(h, b) for b in module.q_basis])))
    out.sort(key=lambda item: (item[1].dimension, item[0]))
    return [s for _, s in out]


def metabolisers(module, pairing):
    """All submodules P with P = P^perp."""
    if module.q_dimension % 2:
        return []
    return [P for P in enumerate_submodules(module)
            if orthogonal_complement(module, pairing, P) == P]


def unique_metaboliser_containing(module, pairing, x):
    if not any(x):
        raise InvalidInputError("element must be nonzero")
    found = [P for P in metabolisers(module, pairing) if P.contains(x)]
    if not found:
        raise MetaboliserLookupError("no metaboliser contains x")
    if len(found) > 1:
        raise MetaboliserLookupError("metaboliser not unique")
    return found[0]
