import cmath
import math
from fractions import Fraction

import pytest

from sliceobs.branched_cover import (
    BRUTE_FORCE_BOUND,
    CoverPresentation,
    LinkingForm,
    cover_homology,
    cover_order_resultant,
    deck_image,
    double_cover_class,
    double_cover_linking_form,
    invariant_subgroup_check,
    is_z2_homology_sphere,
    lifted_generator,
    linking_metabolisers,
)
from sliceobs.errors import InvalidInputError, UnsupportedComputationError
from sliceobs.exact.intmat import AbelianGroup, subgroup_elements
from sliceobs.family import alpha_labels, family_seifert
from sliceobs.alexander_module import build_module

from oracles import (
    alexander_dense,
    cyclic_subgroup,
    invariant_factors_oracle,
    lines_of_square,
    random_seifert_matrix,
    seeded,
)

TREFOIL = [[-1, 1], [0, -1]]
K1 = [[0, 2], [1, 0]]


def block_presentation(V, r):
    """V on the block below the diagonal (cyclically), -V^T on the diagonal."""
    n = len(V)
    M = [[0] * (n * r) for _ in range(n * r)]
    for j in range(r):
        jj = (j + 1) % r
        for a in range(n):
            for b in range(n):
                M[jj * n + a][j * n + b] += V[a][b]
                M[j * n + a][j * n + b] -= V[b][a]
    return M


def fox_order(V, r):
    """|prod_{j=1}^{r-1} Delta(w^j)| in floating point."""
    coeffs = alexander_dense(V)
    w = cmath.exp(2j * math.pi / r)
    p = 1
    for j in range(1, r):
        z = w ** j
        p *= sum(c * z ** i for i, c in enumerate(coeffs))
    return abs(p)


def test_examples():
    assert cover_homology(K1, 3) == AbelianGroup((7, 7))
    assert cover_homology(K1, 2) == AbelianGroup((3, 3))
    assert cover_homology(TREFOIL, 2) == AbelianGroup((3,))
    assert cover_homology(TREFOIL, 3) == AbelianGroup((2, 2))
    assert not is_z2_homology_sphere(TREFOIL, 3)
    assert cover_homology(TREFOIL, 6).free_rank == 2
    assert cover_order_resultant(TREFOIL, 6) == "infinite"
    assert cover_order_resultant(K1, 3) == 49
    assert cover_homology([], 5) == AbelianGroup()
    assert cover_homology(K1, 1) == AbelianGroup()


@pytest.mark.parametrize("seed", range(30))
def test_small_covers_against_determinantal_divisors(seed):
    rng = seeded(seed)
    V = random_seifert_matrix(rng, 1, 4)
    r = rng.randint(2, 3)
    d = invariant_factors_oracle(block_presentation(V, r))
    assert cover_homology(V, r) == AbelianGroup.from_diagonal(d)


@pytest.mark.parametrize("seed", range(40))
def test_order_against_fox_formula(seed):
    rng = seeded(500 + seed)
    V = random_seifert_matrix(rng, rng.randint(1, 2), 3)
    r = rng.randint(2, 6)
    G = cover_homology(V, r)
    want = fox_order(V, r)
    if want < 0.5:
        assert not G.is_finite
        assert cover_order_resultant(V, r) == "infinite"
    else:
        assert G.order == cover_order_resultant(V, r)
        assert math.isclose(G.order, want, rel_tol=1e-9)


def test_trivial_and_invalid_degree():
    with pytest.raises(InvalidInputError):
        cover_homology(K1, 0)
    with pytest.raises(InvalidInputError):
        CoverPresentation(K1, 0)
    with pytest.raises(InvalidInputError):
        lifted_generator(CoverPresentation([], 2), 1)


def test_infinite_cover_rejects_element_queries():
    cover = CoverPresentation(TREFOIL, 6)
    assert not cover.is_finite
    with pytest.raises(UnsupportedComputationError, match="not finite"):
        lifted_generator(cover, 1)


@pytest.mark.parametrize("m", [1, 3, 5])
@pytest.mark.parametrize("r", [2, 3, 5, 7, 11, 13])
def test_family_covers(m, r):
    V = family_seifert(m)
    N = (m + 1) ** r - m ** r
    cover = CoverPresentation(V, r)
    assert cover.group == AbelianGroup((N, N))
    a1, a2 = alpha_labels(build_module(V), m)
    x1, x2 = lifted_generator(cover, a1), lifted_generator(cover, a2)
    assert x1.order == N and x2.order == N
    # deck(x_1) = (m+1)/m x_1 and deck(x_2) = m/(m+1) x_2 modulo N
    assert deck_image(cover, x1) == ((m + 1) * pow(m, -1, N) % N) * x1
    assert deck_image(cover, x2) == (m * pow(m + 1, -1, N) % N) * x2
    assert N % 2 == 1 and is_z2_homology_sphere(V, r)


def test_deck_matrix_has_order_r():
    cover = CoverPresentation(K1, 3)
    D = cover.deck_matrix()
    d = cover.group.invariant_factors
    x = [1, 1]
    y = list(x)
    for _ in range(3):
        y = [sum(D[i][j] * y[j] for j in range(2)) % d[i] for i in range(2)]
    assert y == x


def test_element_arithmetic():
    cover = CoverPresentation(K1, 3)
    x = lifted_generator(cover, 1)
    assert (7 * x).is_zero()
    assert x + (-x) == cover.zero()
    assert cover.class_of(cover.lift(x)) == x


# -- linking forms ----------------------------------------------------------------------

def test_linking_form_examples():
    lf = double_cover_linking_form(K1)
    assert lf.gram == [[0, Fraction(1, 3)], [Fraction(1, 3), 0]]
    assert lf.is_symmetric()
    assert double_cover_linking_form(TREFOIL).gram == [[Fraction(1, 3)]]


@pytest.mark.parametrize("m", [1, 3, 5])
def test_double_cover_metabolisers_brute_force(m):
    V = family_seifert(m)
    N = 2 * m + 1
    lf = double_cover_linking_form(V)
    d = lf.group.invariant_factors
    assert d == (N, N)
    # ambient brute force: lines <(a, b)> of Z^2 / (V + V^T) with lambda(v, v) = 0,
    # lambda(v, w) = v^T (V+V^T)^-1 w = (a b' + a' b) / N
    ambient = []
    for line in lines_of_square(N):
        g = max(line)  # any nonzero element generates a line
        if (2 * g[0] * g[1]) % N == 0:
            ambient.append(frozenset(lf.class_of(list(v)) for v in line))
    assert len(lines_of_square(N)) == N + 1
    mets = linking_metabolisers(lf)
    got = {frozenset(subgroup_elements(mt.generators, d)) for mt in mets}
    assert len(got) == 2
    assert got == set(ambient)
    # and they are the spans of the transported lifts x_1, x_2
    cover = CoverPresentation(V, 2)
    a1, a2 = alpha_labels(build_module(V), m)
    for a in (a1, a2):
        x = double_cover_class(cover, lf, lifted_generator(cover, a))
        assert cyclic_subgroup(x, d) in got


def test_metabolisers_of_non_square_order():
    assert linking_metabolisers(double_cover_linking_form(TREFOIL)) == []


def test_brute_force_bound():
    big = LinkingForm(AbelianGroup((1009, 1009)), [[0, 0], [0, 0]])
    assert 1009 ** 2 > BRUTE_FORCE_BOUND
    with pytest.raises(UnsupportedComputationError, match="bound"):
        linking_metabolisers(big)


def test_invariant_subgroup_check():
    rep = invariant_subgroup_check(K1, 3, [2])
    assert rep.subgroup_order == 7 and rep.group_order == 49
    assert rep.square_order and rep.deck_invariant and rep.passes
    assert rep.self_annihilating is None
    rep = invariant_subgroup_check(K1, 2, [1])
    assert rep.self_annihilating and rep.passes
    cover = CoverPresentation(K1, 2)
    s = lifted_generator(cover, 1) + lifted_generator(cover, 2)
    rep = invariant_subgroup_check(K1, 2, [s], cover=cover)
    assert not rep.passes
    assert "necessary conditions only" in rep.to_dict()["note"]
