"""Independent reference computations used by the tests.

Nothing here imports the library's algorithms; everything is written in the
most naive way that is still obviously correct.
"""

import itertools
import math
import random
from fractions import Fraction


# -- dense polynomials as coefficient lists, lowest degree first ------------------

def dense_mul(a, b):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def dense_eval(a, x):
    return sum(Fraction(c) * Fraction(x) ** i for i, c in enumerate(a))


def poly_from_roots(lead, roots):
    p = [Fraction(lead)]
    for r in roots:
        p = dense_mul(p, [-Fraction(r), Fraction(1)])
    return p


# -- determinants by cofactor expansion --------------------------------------------

def det_cofactor(M):
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    total = 0
    for j in range(n):
        if M[0][j]:
            minor = [row[:j] + row[j + 1:] for row in M[1:]]
            total += (-1) ** j * M[0][j] * det_cofactor(minor)
    return total


def det_poly_matrix(M):
    """Determinant of a matrix of dense polynomials via the Leibniz formula."""
    n = len(M)
    total = [0]
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = [(-1) ** inv]
        for i in range(n):
            term = dense_mul(term, M[i][perm[i]])
        if len(term) > len(total):
            total += [0] * (len(term) - len(total))
        for i, c in enumerate(term):
            total[i] += c
    while len(total) > 1 and total[-1] == 0:
        total.pop()
    return total


def alexander_dense(V):
    """det(tV - V^T) as a dense integer coefficient list."""
    n = len(V)
    M = [[[-V[j][i], V[i][j]] for j in range(n)] for i in range(n)]
    return det_poly_matrix(M) if n else [1]


def trim(p):
    """Strip leading/trailing zeros; returns (shift, coefficients)."""
    lo = next((i for i, c in enumerate(p) if c), None)
    if lo is None:
        return 0, []
    hi = max(i for i, c in enumerate(p) if c)
    return lo, list(p[lo:hi + 1])


# -- invariant factors via determinantal divisors -----------------------------------

def determinantal_divisors(M):
    n = len(M)
    m = len(M[0]) if n else 0
    out = []
    for k in range(1, min(n, m) + 1):
        g = 0
        for rows in itertools.combinations(range(n), k):
            for cols in itertools.combinations(range(m), k):
                g = math.gcd(g, det_cofactor([[M[i][j] for j in cols] for i in rows]))
        out.append(g)
    return out


def invariant_factors_oracle(M):
    dd = determinantal_divisors(M)
    out = []
    prev = 1
    for d in dd:
        if d == 0:
            out.append(0)
            prev = 0
            continue
        out.append(d // prev)
        prev = d
    return out


# -- finite abelian groups ----------------------------------------------------------

def all_elements(d):
    return [tuple(v) for v in itertools.product(*(range(x) for x in d))]


def cyclic_subgroup(g, d):
    seen = set()
    x = tuple(0 for _ in d)
    while x not in seen:
        seen.add(x)
        x = tuple((a + b) % m for a, b, m in zip(x, g, d))
    return frozenset(seen)


def lines_of_square(N):
    """All N + 1 subgroups of order N in (Z/N)^2 for N prime."""
    gens = [(1, k) for k in range(N)] + [(0, 1)]
    return [cyclic_subgroup(g, (N, N)) for g in gens]


# -- random Seifert matrices, generated independently --------------------------------

def random_seifert_matrix(rng, genus, bound):
    """Standard symplectic lift plus a random symmetric integer matrix."""
    n = 2 * genus
    S = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            S[i][j] = S[j][i] = rng.randint(-bound, bound)
    for i in range(genus):
        S[2 * i][2 * i + 1] += 1
    return S


def seeded(seed):
    return random.Random(seed)
