"""
Integer matrices: determinants, Smith normal form with unimodular
transforms, finitely generated abelian groups and their finite subgroups.

Matrices are plain ``list[list[int]]``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .linalg import identity, transpose


def kron(A, B):
    """Kronecker product A (x) B; index (a, i) of the result is a*len(B) + i."""
    if not A or not B:
        return []
    rb, cb = len(B), len(B[0])
    out = []
    for arow in A:
        for i in range(rb):
            out.append([a * B[i][j] for a in arow for j in range(cb)])
    return out


def det_int(M):
    """Exact determinant via fraction-free (Bareiss) elimination."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(r) for r in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            p = next((i for i in range(k + 1, n) if A[i][k]), None)
            if p is None:
                return 0
            A[k], A[p] = A[p], A[k]
            sign = -sign
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * A[n - 1][n - 1]


@dataclass
class SmithForm:
    """``U @ M @ W == D`` with U, W unimodular and D in Smith normal form."""

    D: list
    U: list | None = None
    W: list | None = None
    U_inv: list | None = None

    @property
    def diagonal(self):
        return [self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0))]


def smith_normal_form_int(M, transforms=True):
    """Smith normal form of a rectangular integer matrix.

    Pivots on the entry of smallest absolute value; Euclidean reduction of the
    pivot row and column, then a divisibility sweep so that d_1 | d_2 | ...
    The diagonal is non-negative.  With ``transforms`` the unimodular U, W and
    U^-1 are tracked as well.
    """
    n = len(M)
    m = len(M[0]) if n else 0
    A = [list(map(int, r)) for r in M]
    U = identity(n) if transforms else None
    Ui = identity(n) if transforms else None
    W = identity(m) if transforms else None

    def row_swap(i, j):
        A[i], A[j] = A[j], A[i]
        if transforms:
            U[i], U[j] = U[j], U[i]
            for row in Ui:
                row[i], row[j] = row[j], row[i]

    def row_addmul(i, j, q):
        # row_i += q * row_j
        ri, rj = A[i], A[j]
        for c in range(m):
            if rj[c]:
                ri[c] += q * rj[c]
        if transforms:
            ui, uj = U[i], U[j]
            for c in range(n):
                if uj[c]:
                    ui[c] += q * uj[c]
            for row in Ui:
                if row[i]:
                    row[j] -= q * row[i]

    def row_neg(i):
        A[i] = [-x for x in A[i]]
        if transforms:
            U[i] = [-x for x in U[i]]
            for row in Ui:
                row[i] = -row[i]

    def col_swap(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        if transforms:
            for row in W:
                row[i], row[j] = row[j], row[i]

    def col_addmul(i, j, q):
        # col_i += q * col_j
        for row in A:
            if row[j]:
                row[i] += q * row[j]
        if transforms:
            for row in W:
                if row[j]:
                    row[i] += q * row[j]

    for t in range(min(n, m)):
        best = None
        for i in range(t, n):
            row = A[i]
            for j in range(t, m):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
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
                    row_addmul(i, t, -(A[i][t] // p))
                    if A[i][t]:
                        dirty = True
            for j in range(t + 1, m):
                if A[t][j]:
                    col_addmul(j, t, -(A[t][j] // p))
                    if A[t][j]:
                        dirty = True
            if dirty:
                cand = [(abs(A[i][t]), i, t) for i in range(t + 1, n) if A[i][t]]
                cand += [(abs(A[t][j]), t, j) for j in range(t + 1, m) if A[t][j]]
                _, i, j = min(cand)
                if i != t:
                    row_swap(i, t)
                else:
                    col_swap(j, t)
                continue
            bad = next((i for i in range(t + 1, n)
                        if any(x % p for x in A[i][t + 1:])), None)
            if bad is not None:
                row_addmul(t, bad, 1)
                continue
            break
        if A[t][t] < 0:
            row_neg(t)
    return SmithForm(A, U, W, Ui)


@dataclass(frozen=True)
class AbelianGroup:
    """Z^free_rank (+) Z/d_1 (+) ... (+) Z/d_k with d_1 | d_2 | ... and d_i >= 2."""

    invariant_factors: tuple = ()
    free_rank: int = 0

    def __post_init__(self):
        d = tuple(int(x) for x in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", d)
        if any(x < 2 for x in d):
            raise ValueError(f"invariant factors must be >= 2, got {d}")
        if any(b % a for a, b in zip(d, d[1:])):
            raise ValueError(f"invariant factors must form a divisibility chain, got {d}")
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")

    @classmethod
    def from_diagonal(cls, diag, extra_free=0):
        diag = [abs(x) for x in diag]
        return cls(tuple(x for x in diag if x > 1),
                   sum(1 for x in diag if x == 0) + extra_free)

    @classmethod
    def cokernel(cls, M):
        """Z^rows / (column span of M)."""
        n = len(M)
        if n == 0:
            return cls()
        m = len(M[0])
        snf = smith_normal_form_int(M, transforms=False)
        return cls.from_diagonal(snf.diagonal, max(0, n - m))

    @property
    def is_finite(self):
        return self.free_rank == 0

    @property
    def order(self):
        """The group order, or None when the group is infinite."""
        if self.free_rank:
            return None
        return math.prod(self.invariant_factors)

    @property
    def exponent(self):
        if self.free_rank:
            return None
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        for d, grp in itertools.groupby(self.invariant_factors):
            k = len(list(grp))
            parts.append(f"(Z/{d})^{k}" if k > 1 else f"Z/{d}")
        return " + ".join(parts) if parts else "0"

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text == "0":
            return cls()
        free, factors = 0, []
        for part in text.split("+"):
            part = part.strip()
            if part == "Z":
                free += 1
            elif part.startswith("Z^"):
                free += int(part[2:])
            elif part.startswith("(Z/"):
                d, k = part[3:].split(")^")
                factors += [int(d)] * int(k)
            elif part.startswith("Z/"):
                factors.append(int(part[2:]))
            else:
                raise ValueError(f"cannot parse group summand {part!r}")
        return cls(tuple(sorted(factors)), free)

    def to_dict(self):
        return {"invariant_factors": list(self.invariant_factors),
                "free_rank": self.free_rank}

    @classmethod
    def from_dict(cls, d):
        return cls(tuple(d["invariant_factors"]), d["free_rank"])


# -- finite subgroups of Z/d_1 + ... + Z/d_k -----------------------------------

def reduce_vector(v, d):
    return tuple(x % q for x, q in zip(v, d))


def element_order(v, d):
    o = 1
    for x, q in zip(v, d):
        o = math.lcm(o, q // math.gcd(x % q, q))
    return o


def subgroup_order(gens, d):
    """Order of the subgroup of (+) Z/d_i generated by ``gens``."""
    k = len(d)
    if k == 0:
        return 1
    cols = [list(g) for g in gens] + [[q if i == j else 0 for i in range(k)]
                                       for j, q in enumerate(d)]
    index = math.prod(x for x in smith_normal_form_int(transpose(cols), False).diagonal)
    return math.prod(d) // index


def subgroup_contains(gens, d, v):
    return subgroup_order(list(gens) + [list(v)], d) == subgroup_order(gens, d)


def subgroup_elements(gens, d):
    """All elements of the generated subgroup, sorted."""
    zero = tuple(0 for _ in d)
    seen = {zero}
    frontier = [zero]
    gens = [reduce_vector(g, d) for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple((a + b) % q for a, b, q in zip(x, g, d))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)


def group_elements(d):
    return itertools.product(*(range(q) for q in d))


def _divisors(n):
    small = [i for i in range(1, math.isqrt(n) + 1) if n % i == 0]
    return sorted(set(small + [n // i for i in small]))


def _hnf_contains(H, v):
    """Is v in the column span of the upper-triangular integer matrix H?"""
    k = len(H)
    v = list(v)
    for i in range(k - 1, -1, -1):
        if v[i] % H[i][i]:
            return False
        x = v[i] // H[i][i]
        for r in range(i + 1):
            v[r] -= x * H[r][i]
    return True


def enumerate_subgroups(d, order):
    """Every subgroup of (+) Z/d_i of the given order, as canonical generator lists.

    Subgroups correspond to lattices between d_1 Z + ... + d_k Z and Z^k; each
    such lattice has a unique upper-triangular Hermite basis, which is
    enumerated directly.
    """
    k = len(d)
    total = math.prod(d)
    if order <= 0 or total % order:
        return []
    index = total // order
    out = []

    def diagonals(i, rest):
        if i == k - 1:
            yield (rest,)
            return
        for h in _divisors(rest):
            for tail in diagonals(i + 1, rest // h):
                yield (h,) + tail

    if k == 0:
        return [[]] if order == 1 else []
    lattice_gens = [[q if i == j else 0 for i in range(k)] for j, q in enumerate(d)]
    for diag in diagonals(0, index):
        slots = [(i, j) for i in range(k) for j in range(i + 1, k)]
        ranges = [range(diag[i]) for i, _ in slots]
        for offs in itertools.product(*ranges):
            H = [[0] * k for _ in range(k)]
            for i in range(k):
                H[i][i] = diag[i]
            for (i, j), x in zip(slots, offs):
                H[i][j] = x
            if all(_hnf_contains(H, g) for g in lattice_gens):
                gens = []
                for j in range(k):
                    g = reduce_vector([H[i][j] for i in range(k)], d)
                    if any(g):
                        gens.append(g)
                out.append(gens)
    return out
