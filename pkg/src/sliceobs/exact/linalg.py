"""Dense exact linear algebra over Q on lists of lists of Fractions."""

from __future__ import annotations

from fractions import Fraction


def to_fractions(M):
    return [[Fraction(x) for x in row] for row in M]


def identity(n, one=1, zero=0):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def transpose(M, ncols=None):
    if not M:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*M)]


def matmul(A, B):
    if not A:
        return []
    if not B:
        return [[] for _ in A]
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matvec(A, v):
    return [sum(a * b for a, b in zip(row, v)) for row in A]


def rref(rows):
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    M = [list(map(Fraction, r)) for r in rows]
    if not M:
        return [], []
    ncols = len(M[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(rows):
    return len(rref(rows)[0])


def nullspace(M, ncols=None):
    """Basis of {x : M x = 0}, one vector per free column."""
    if not M:
        n = ncols or 0
        return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    n = len(M[0])
    R, pivots = rref(M)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for row, p in zip(R, pivots):
            x[p] = -row[f]
        basis.append(x)
    return basis


def inverse(M):
    """Inverse over Q by Gauss-Jordan; raises ZeroDivisionError if singular."""
    n = len(M)
    A = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(M)]
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c]), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        A[c], A[p] = A[p], A[c]
        inv = 1 / A[c][c]
        A[c] = [x * inv for x in A[c]]
        for i in range(n):
            if i != c and A[i][c]:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[c])]
    return [row[n:] for row in A]


def solve_in_span(basis, v):
    """Coefficients expressing ``v`` in the row span of ``basis``, or None."""
    if not basis:
        return [] if not any(v) else None
    k = len(basis)
    # columns are basis vectors
    M = [[basis[j][i] for j in range(k)] + [v[i]] for i in range(len(v))]
    R, pivots = rref(M)
    if k in pivots:
        return None
    x = [Fraction(0)] * k
    for row, p in zip(R, pivots):
        x[p] = row[k]
    return x


def in_span(basis, v):
    return solve_in_span(basis, v) is not None


def det(M):
    """Determinant over Q by Gaussian elimination."""
    n = len(M)
    A = [list(map(Fraction, r)) for r in M]
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            A[c], A[p] = A[p], A[c]
            d = -d
        piv = A[c][c]
        d *= piv
        for i in range(c + 1, n):
            if A[i][c]:
                f = A[i][c] / piv
                A[i] = [a - f * b for a, b in zip(A[i], A[c])]
    return d
