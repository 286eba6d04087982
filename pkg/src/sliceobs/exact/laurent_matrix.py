"""Matrices over Q[t, t^-1]: determinant, Smith normal form, inversion over Q(t)."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import SingularMatrixError
from .laurent import ONE, ZERO, LaurentPolynomial, RationalFunction


def lmatrix(rows):
    """Coerce a nested list of scalars/polynomials to Laurent polynomial entries."""
    return [[LaurentPolynomial.coerce(x) for x in row] for row in rows]


def lidentity(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def lmatmul(A, B):
    if not A:
        return []
    Bt = list(zip(*B)) if B else []
    out = []
    for row in A:
        new = []
        for col in Bt:
            s = ZERO
            for a, b in zip(row, col):
                if a and b:
                    s = s + a * b
            new.append(s)
        out.append(new)
    return out


def lmatvec(A, v):
    out = []
    for row in A:
        s = ZERO
        for a, b in zip(row, v):
            if a and b:
                s = s + a * b
        out.append(s)
    return out


def seifert_presentation(V, t=None):
    """The Alexander presentation matrix t*V - V^T."""
    t = t if t is not None else LaurentPolynomial.monomial(1, 1)
    n = len(V)
    return [[t * V[i][j] - V[j][i] for j in range(n)] for i in range(n)]


def det_laurent(M):
    """Determinant by Bareiss elimination with exact Laurent division."""
    n = len(M)
    if n == 0:
        return ONE
    A = [list(r) for r in M]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if not A[k][k]:
            p = next((i for i in range(k + 1, n) if A[i][k]), None)
            if p is None:
                return ZERO
            A[k], A[p] = A[p], A[k]
            sign = -sign
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * akk - aik * A[k][j]).exact_div(prev)
            A[i][k] = ZERO
        prev = akk
    return A[n - 1][n - 1] * sign


def invert_over_fraction_field(M):
    """Inverse of a square Laurent matrix over Q(t).

    Fraction-free Gauss-Jordan on [M | I]: every division is exact, and the
    final state is [d I | d M^-1] with d = +-det M.
    """
    n = len(M)
    A = [list(row) + [ONE if i == j else ZERO for j in range(n)]
         for i, row in enumerate(lmatrix(M))]
    prev = ONE
    for k in range(n):
        if not A[k][k]:
            p = next((i for i in range(k + 1, n) if A[i][k]), None)
            if p is None:
                raise SingularMatrixError()
            A[k], A[p] = A[p], A[k]
        akk = A[k][k]
        for i in range(n):
            if i == k:
                continue
            aik = A[i][k]
            A[i] = [(x * akk - aik * y).exact_div(prev) if (aik and y) or x else ZERO
                    for x, y in zip(A[i], A[k])]
        prev = akk
    d = A[n - 1][n - 1] if n else ONE
    return [[RationalFunction(A[i][n + j], d) for j in range(n)] for i in range(n)]


@dataclass
class LaurentSmithForm:
    """``U @ M @ W == D`` over Q[t, t^-1]; ``factors`` is the diagonal of D.

    Nonzero factors are monic with lowest exponent 0.
    """

    factors: list
    D: list
    U: list
    W: list
    U_inv: list

    @property
    def nonunit_factors(self):
        return [f for f in self.factors if not f or f.span > 0]


def smith_normal_form_laurent(M):
    """Smith normal form over the Euclidean domain Q[t, t^-1].

    The Euclidean norm is the exponent span; pivots are chosen of minimal span.
    """
    M = lmatrix(M)
    n = len(M)
    m = len(M[0]) if n else 0
    A = [list(r) for r in M]
    U, Ui, W = lidentity(n), lidentity(n), lidentity(m)

    def norm(p):
        return p.span

    def row_swap(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]
        for row in Ui:
            row[i], row[j] = row[j], row[i]

    def row_addmul(i, j, q):
        A[i] = [a + q * b if b else a for a, b in zip(A[i], A[j])]
        U[i] = [a + q * b if b else a for a, b in zip(U[i], U[j])]
        for row in Ui:
            if row[i]:
                row[j] = row[j] - q * row[i]

    def row_scale(i, u):
        # u is a unit c t^k
        A[i] = [a * u for a in A[i]]
        U[i] = [a * u for a in U[i]]
        ui = u ** -1
        for row in Ui:
            row[i] = row[i] * ui

    def col_swap(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in W:
            row[i], row[j] = row[j], row[i]

    def col_addmul(i, j, q):
        for row in A:
            if row[j]:
                row[i] = row[i] + q * row[j]
        for row in W:
            if row[j]:
                row[i] = row[i] + q * row[j]

    for t in range(min(n, m)):
        best = None
        for i in range(t, n):
            for j in range(t, m):
                if A[i][j] and (best is None or norm(A[i][j]) < best[0]):
                    best = (norm(A[i][j]), i, j)
        if best is None:
            break
        _, i, j = best
        if i != t:
            row_swap(i, t)
        if j != t:
            col_swap(j, t)
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, n):
                if A[i][t]:
                    q, _ = divmod(A[i][t], p)
                    row_addmul(i, t, -q)
                    if A[i][t]:
                        dirty = True
            for j in range(t + 1, m):
                if A[t][j]:
                    q, _ = divmod(A[t][j], p)
                    col_addmul(j, t, -q)
                    if A[t][j]:
                        dirty = True
            if dirty:
                cand = [(norm(A[i][t]), i, t) for i in range(t + 1, n) if A[i][t]]
                cand += [(norm(A[t][j]), t, j) for j in range(t + 1, m) if A[t][j]]
                _, i, j = min(cand, key=lambda c: c[0])
                if i != t:
                    row_swap(i, t)
                else:
                    col_swap(j, t)
                continue
            bad = next((i for i in range(t + 1, n)
                        if any(x and not p.divides(x) for x in A[i][t + 1:m])), None)
            if bad is not None:
                row_addmul(t, bad, ONE)
                continue
            break
        p = A[t][t]
        u = p.unit_part()
        if u != ONE:
            row_scale(t, u ** -1)
    k = min(n, m)
    factors = [A[i][i] for i in range(k)]
    return LaurentSmithForm(factors, A, U, W, Ui)
