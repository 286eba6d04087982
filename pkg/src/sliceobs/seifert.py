"""
Seifert matrices and the classical invariants computed from them.

Basis convention: V[i][j] = lk(a_i^+, a_j).  Using the transpose instead
gives the same Alexander polynomial, module, covers and metabolisers with
generator labels permuted.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotSeifertMatrixError
from .exact.intmat import det_int
from .exact.laurent_matrix import det_laurent, seifert_presentation


@dataclass(frozen=True)
class SeifertMatrix:
    """A validated 2g x 2g integer matrix V with det(V - V^T) = 1."""

    matrix: tuple
    name: str | None = None

    @property
    def size(self):
        return len(self.matrix)

    @property
    def genus(self):
        return self.size // 2

    def rows(self):
        return [list(r) for r in self.matrix]

    def transpose(self):
        return [list(c) for c in zip(*self.matrix)] if self.matrix else []

    def symmetrized(self):
        """V + V^T."""
        n = self.size
        return [[self.matrix[i][j] + self.matrix[j][i] for j in range(n)] for i in range(n)]

    def skew(self):
        """V - V^T."""
        n = self.size
        return [[self.matrix[i][j] - self.matrix[j][i] for j in range(n)] for i in range(n)]

    def __str__(self):
        label = f"{self.name}: " if self.name else ""
        return label + str(self.rows())


def validate_seifert(M, name=None):
    """Check that ``M`` is a Seifert matrix of a knot and wrap it."""
    if isinstance(M, SeifertMatrix):
        return M
    rows = [list(r) for r in M]
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise NotSeifertMatrixError("matrix is not square")
        for x in r:
            if isinstance(x, bool) or not isinstance(x, int):
                raise NotSeifertMatrixError(f"entry {x!r} is not an integer")
    if n % 2:
        raise NotSeifertMatrixError(f"odd size {n}")
    skew = [[rows[i][j] - rows[j][i] for j in range(n)] for i in range(n)]
    d = det_int(skew)
    if d != 1:
        raise NotSeifertMatrixError(f"det(V-V^T) = {d} != 1")
    return SeifertMatrix(tuple(tuple(r) for r in rows), name)


def presentation_matrix(V):
    """t V - V^T over Q[t, t^-1]; relations are its columns."""
    V = validate_seifert(V)
    return seifert_presentation(V.rows())


def alexander_polynomial(V):
    """det(tV - V^T), normalised to lowest exponent 0 and positive leading coefficient."""
    return det_laurent(presentation_matrix(V)).normalize()


def symmetric_signature(S):
    """Signature of a symmetric rational matrix by exact congruence diagonalisation.

    A zero diagonal pivot is repaired by swapping in a nonzero diagonal entry,
    or failing that by adding a row/column j with S[k][j] != 0 to row/column k,
    which makes the new pivot 2*S[k][j] + S[j][j] = 2*S[k][j].
    """
    A = [list(map(Fraction, r)) for r in S]
    n = len(A)
    pos = neg = 0
    for k in range(n):
        if not A[k][k]:
            j = next((j for j in range(k + 1, n) if A[j][j]), None)
            if j is not None:
                A[k], A[j] = A[j], A[k]
                for row in A:
                    row[k], row[j] = row[j], row[k]
            else:
                j = next((j for j in range(k + 1, n) if A[k][j]), None)
                if j is None:
                    continue
                A[k] = [a + b for a, b in zip(A[k], A[j])]
                for row in A:
                    row[k] += row[j]
        p = A[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            if A[i][k]:
                f = A[i][k] / p
                A[i] = [a - f * b for a, b in zip(A[i], A[k])]
        # the matching column operations only touch row k
        for i in range(k + 1, n):
            A[i][k] = Fraction(0)
            A[k][i] = Fraction(0)
    return pos - neg


@dataclass(frozen=True)
class ClassicalInvariants:
    determinant: int
    signature: int


def classical_invariants(V):
    V = validate_seifert(V)
    S = V.symmetrized()
    return ClassicalInvariants(abs(det_int(S)), symmetric_signature(S))


def standard_symplectic_lift(genus):
    """Strictly upper-triangular U with U - U^T the standard symplectic form."""
    n = 2 * genus
    U = [[0] * n for _ in range(n)]
    for i in range(genus):
        U[2 * i][2 * i + 1] = 1
    return U


def random_seifert(genus, coefficient_bound, seed=None):
    """A + U with A random symmetric (entries in [-B, B]) and U the symplectic lift."""
    if genus < 1:
        raise ValueError("genus must be >= 1")
    if coefficient_bound < 0:
        raise ValueError("coefficient bound must be >= 0")
    rng = random.Random(seed)
    n = 2 * genus
    B = coefficient_bound
    M = standard_symplectic_lift(genus)
    for i in range(n):
        for j in range(i, n):
            a = rng.randint(-B, B)
            M[i][j] += a
            if i != j:
                M[j][i] += a
    return validate_seifert(M, name=f"random(g={genus},B={B},seed={seed})")
