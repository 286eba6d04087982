"""
Homology of cyclic branched covers from a Seifert matrix.

H_1(Sigma_r) is computed as the integer cokernel of P (x) V - I (x) V^T,
where P is the r x r cyclic shift (P[j+1][j] = 1).  Index (j, i) = j*2g + i
stands for e_i (x) t^j; the deck transformation is P (x) I, i.e.
multiplication by t.  The lift x_i of the i-th generator is e_i in block 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InvalidInputError, UnsupportedComputationError
from .exact import linalg
from .exact.intmat import (
    AbelianGroup,
    element_order,
    enumerate_subgroups,
    group_elements,
    kron,
    reduce_vector,
    smith_normal_form_int,
    subgroup_contains,
    subgroup_order,
)
from .exact.laurent import LaurentPolynomial
from .exact.resultant import resultant
from .seifert import alexander_polynomial, validate_seifert

BRUTE_FORCE_BOUND = 10 ** 6


def cyclic_shift(r):
    return [[1 if i == (j + 1) % r else 0 for j in range(r)] for i in range(r)]


def _presentation(V, r):
    rows = V.rows()
    n = V.size
    if n == 0:
        return []
    P = cyclic_shift(r)
    I = [[int(i == j) for j in range(r)] for i in range(r)]
    A = kron(P, rows)
    B = kron(I, V.transpose())
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


@dataclass(frozen=True, eq=False)
class CoverElement:
    """A class in H_1(Sigma_r), in Smith coordinates reduced modulo the invariant factors."""

    cover: "CoverPresentation"
    coords: tuple

    @property
    def orders(self):
        return self.cover.group.invariant_factors

    @property
    def order(self):
        return element_order(self.coords, self.orders)

    def is_zero(self):
        return not any(self.coords)

    def __add__(self, other):
        return self.cover.element([a + b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return self.cover.element([-a for a in self.coords])

    def __rmul__(self, k):
        return self.cover.element([k * a for a in self.coords])

    def __eq__(self, other):
        if not isinstance(other, CoverElement):
            return NotImplemented
        return self.cover is other.cover and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"CoverElement(r={self.cover.r}, coords={list(self.coords)}, order={self.order})"


class CoverPresentation:
    """Presentation of H_1 of the r-fold cyclic branched cover, with Smith transforms."""

    def __init__(self, V, r):
        if r < 1:
            raise InvalidInputError(f"cover degree must be >= 1, got {r}")
        self.source = validate_seifert(V)
        self.r = r
        n = self.source.size * r
        self.presentation = _presentation(self.source, r)
        self.deck = kron(cyclic_shift(r), [[int(i == j) for j in range(self.source.size)]
                                           for i in range(self.source.size)]) if n else []
        if n:
            self.snf = smith_normal_form_int(self.presentation)
            diag = self.snf.diagonal
        else:
            self.snf = None
            diag = []
        self.group = AbelianGroup.from_diagonal(diag)
        # Smith coordinates that survive in the cokernel (d_k != 1)
        self._torsion_idx = [k for k, d in enumerate(diag) if d > 1]
        self._free_idx = [k for k, d in enumerate(diag) if d == 0]

    @property
    def is_finite(self):
        return self.group.is_finite

    def _require_finite(self):
        if not self.is_finite:
            raise UnsupportedComputationError("cover homology not finite")

    def element(self, coords):
        return CoverElement(self, reduce_vector(coords, self.group.invariant_factors))

    def zero(self):
        return self.element([0] * len(self.group.invariant_factors))

    def class_of(self, v):
        """The class of an integer vector in Z^{2g r}."""
        self._require_finite()
        w = linalg.matvec(self.snf.U, v)
        return self.element([w[k] for k in self._torsion_idx])

    def lift(self, x):
        """An integer vector in Z^{2g r} representing ``x``."""
        full = [0] * len(self.presentation)
        for k, c in zip(self._torsion_idx, x.coords):
            full[k] = c
        return linalg.matvec(self.snf.U_inv, full)

    def deck_matrix(self):
        """The deck transformation on Smith coordinates (columns are images of generators)."""
        self._require_finite()
        k = len(self._torsion_idx)
        cols = []
        for j in range(k):
            e = self.element([int(i == j) for i in range(k)])
            cols.append(list(deck_image(self, e).coords))
        return [[cols[j][i] for j in range(k)] for i in range(k)]


def cover_presentation(V, r):
    return CoverPresentation(V, r)


def cover_homology(V, r):
    """H_1(Sigma_r; Z) as an abelian group (free rank > 0 when the cover is not a QHS)."""
    if r < 1:
        raise InvalidInputError(f"cover degree must be >= 1, got {r}")
    V = validate_seifert(V)
    return AbelianGroup.cokernel(_presentation(V, r))


def cover_order_resultant(V, r):
    """|Res(Delta, 1 + t + ... + t^{r-1})|, or the string "infinite" when it vanishes."""
    if r < 1:
        raise InvalidInputError(f"cover degree must be >= 1, got {r}")
    delta = alexander_polynomial(V)
    cyclo = LaurentPolynomial([1] * r)
    res = abs(resultant(delta, cyclo))
    return "infinite" if res == 0 else res


def lifted_generator(cover, i):
    """x_i: the class of e_i (x) t^0, for 1 <= i <= 2g."""
    n = cover.source.size
    if n == 0:
        raise InvalidInputError("the unknot has no generators to lift")
    if not 1 <= i <= n:
        raise InvalidInputError(f"generator index must be in 1..{n}, got {i}")
    cover._require_finite()
    v = [0] * (n * cover.r)
    v[i - 1] = 1
    return cover.class_of(v)


def deck_image(cover, x):
    cover._require_finite()
    v = cover.lift(x)
    return cover.class_of(linalg.matvec(cover.deck, v))


def is_z2_homology_sphere(V, r):
    G = cover_homology(V, r)
    return G.is_finite and G.order % 2 == 1


# -- linking forms -------------------------------------------------------------

def _frac_mod1(x):
    return x - math.floor(x)


@dataclass
class LinkingForm:
    """A symmetric Q/Z-valued pairing on a finite abelian group.

    ``gram[a][b]`` is the value on the a-th and b-th Smith generators, in [0, 1).
    ``ambient_inverse`` and ``U`` (optional) record the presentation the form
    came from so that ambient integer vectors can be paired and transported.
    """

    group: AbelianGroup
    gram: list
    ambient_inverse: list | None = field(default=None, repr=False)
    U: list | None = field(default=None, repr=False)
    torsion_idx: list | None = field(default=None, repr=False)

    def pair(self, x, y):
        s = Fraction(0)
        for a, xa in enumerate(x):
            if xa:
                for b, yb in enumerate(y):
                    if yb:
                        s += self.gram[a][b] * xa * yb
        return _frac_mod1(s)

    def class_of(self, v):
        """Group coordinates of an ambient integer vector."""
        w = linalg.matvec(self.U, v)
        return reduce_vector([w[k] for k in self.torsion_idx], self.group.invariant_factors)

    def is_symmetric(self):
        k = len(self.gram)
        return all(self.gram[i][j] == self.gram[j][i] for i in range(k) for j in range(k))

    def perp(self, gens):
        """P^perp by brute force over the whole group."""
        d = self.group.invariant_factors
        return [x for x in group_elements(d) if all(self.pair(x, g) == 0 for g in gens)]


def double_cover_linking_form(V):
    """lambda = (V + V^T)^-1 mod 1 on the cokernel of V + V^T."""
    V = validate_seifert(V)
    S = V.symmetrized()
    if V.size == 0:
        return LinkingForm(AbelianGroup(), [], [], [], [])
    snf = smith_normal_form_int(S)
    diag = snf.diagonal
    if any(d == 0 for d in diag):
        raise UnsupportedComputationError("degenerate double cover")
    Sinv = linalg.inverse(S)
    idx = [k for k, d in enumerate(diag) if d > 1]
    lifts = [[row[k] for row in snf.U_inv] for k in idx]
    gram = [[_frac_mod1(sum(a * sum(Sinv[i][j] * b for j, b in enumerate(lb))
                            for i, a in enumerate(la)))
             for lb in lifts] for la in lifts]
    return LinkingForm(AbelianGroup.from_diagonal(diag), gram, Sinv, snf.U, idx)


@dataclass(frozen=True)
class LinkingMetaboliser:
    generators: tuple
    order: int
    deck_invariant: bool | None = None


def _apply_matrix_mod(M, v, d):
    return reduce_vector(linalg.matvec(M, v), d)


def linking_metabolisers(form, deck=None):
    """All subgroups P with |P|^2 = |G| and P = P^perp, by exhaustive search."""
    G = form.group
    d = G.invariant_factors
    order = G.order
    if order > BRUTE_FORCE_BOUND:
        raise UnsupportedComputationError("brute force bound exceeded")
    root = math.isqrt(order)
    if root * root != order:
        return []
    out = []
    for gens in enumerate_subgroups(d, root):
        if any(form.pair(a, b) for a in gens for b in gens):
            continue
        if len(form.perp(gens)) != root:
            continue
        inv = None
        if deck is not None:
            inv = all(subgroup_contains(gens, d, _apply_matrix_mod(deck, g, d)) for g in gens)
        out.append(LinkingMetaboliser(tuple(tuple(g) for g in gens), root, inv))
    return out


def double_cover_class(cover, lf, x):
    """Transport a class of H_1(Sigma_2) from cover coordinates to linking-form coordinates.

    Setting t = -1 identifies the cover presentation with V + V^T, sending
    e_i (x) t^j to (-1)^j e_i.
    """
    if cover.r != 2:
        raise InvalidInputError("transport to the linking form needs r = 2")
    n = cover.source.size
    v = cover.lift(x)
    folded = [v[i] - v[n + i] for i in range(n)]
    return lf.class_of(folded)


@dataclass(frozen=True)
class SubgroupReport:
    r: int
    subgroup_order: int
    group_order: int
    square_order: bool
    deck_invariant: bool
    self_annihilating: bool | None
    passes: bool
    note: str = ("necessary conditions only - linking-form self-annihilation "
                 "verified only at r = 2")

    def to_dict(self):
        return {
            "r": self.r,
            "subgroup_order": self.subgroup_order,
            "group_order": self.group_order,
            "square_order": self.square_order,
            "deck_invariant": self.deck_invariant,
            "self_annihilating": self.self_annihilating,
            "passes": self.passes,
            "note": self.note,
        }


def invariant_subgroup_check(V, r, generators, cover=None):
    """Necessary conditions for a subgroup of H_1(Sigma_r) to be a slice-disc kernel.

    ``generators`` holds generator indices (1-based, meaning the lifts x_i) or
    :class:`CoverElement` instances.
    """
    cover = cover if cover is not None else CoverPresentation(V, r)
    cover._require_finite()
    gens = [lifted_generator(cover, g) if isinstance(g, int) else g for g in generators]
    d = cover.group.invariant_factors
    vecs = [list(g.coords) for g in gens]
    P = subgroup_order(vecs, d)
    total = cover.group.order
    square = P * P == total
    deck_ok = all(subgroup_contains(vecs, d, deck_image(cover, g).coords) for g in gens)
    annihilating = None
    if r == 2:
        lf = double_cover_linking_form(cover.source)
        lvecs = [double_cover_class(cover, lf, g) for g in gens]
        annihilating = all(lf.pair(a, b) == 0 for a in lvecs for b in lvecs)
    passes = square and deck_ok and annihilating is not False
    return SubgroupReport(r, P, total, square, deck_ok, annihilating, passes)
