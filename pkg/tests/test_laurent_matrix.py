from hypothesis import given, settings
from hypothesis import strategies as st

from sliceobs.exact.laurent import ONE, ZERO, LaurentPolynomial, RationalFunction
from sliceobs.exact.laurent_matrix import (
    det_laurent,
    invert_over_fraction_field,
    lidentity,
    lmatmul,
    seifert_presentation,
    smith_normal_form_laurent,
)

from oracles import alexander_dense, det_poly_matrix, random_seifert_matrix, seeded, trim

polys = st.lists(st.integers(-3, 3), min_size=0, max_size=3)


def laurent_matrices(max_n=3):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(polys, min_size=n, max_size=n), min_size=n, max_size=n))


@given(laurent_matrices())
@settings(max_examples=80)
def test_det_matches_leibniz(Mc):
    M = [[LaurentPolynomial(c) for c in row] for row in Mc]
    want = LaurentPolynomial(det_poly_matrix([[c or [0] for c in row] for row in Mc]))
    assert det_laurent(M) == want


@given(laurent_matrices())
@settings(max_examples=60, deadline=None)
def test_smith_form_transforms_and_divisibility(Mc):
    M = [[LaurentPolynomial(c) for c in row] for row in Mc]
    S = smith_normal_form_laurent(M)
    assert lmatmul(lmatmul(S.U, M), S.W) == S.D
    assert lmatmul(S.U, S.U_inv) == lidentity(len(M))
    n = len(M)
    for i in range(n):
        for j in range(n):
            if i != j:
                assert not S.D[i][j]
    nz = [f for f in S.factors if f]
    assert all(f.low == 0 and f.lc == 1 for f in nz)
    assert all(a.divides(b) for a, b in zip(nz, nz[1:]))
    prod = ONE
    for f in S.factors:
        prod = prod * f
    assert prod.associated(det_laurent(M)) or (not prod and not det_laurent(M))


def test_family_presentation_smith_form():
    S = smith_normal_form_laurent(seifert_presentation([[0, 2], [1, 0]]))
    assert [str(f) for f in S.factors] == ["1", "t^2 - (5/2)t + 1"]


def test_inverse_over_fraction_field():
    rng = seeded(3)
    for _ in range(10):
        V = random_seifert_matrix(rng, 2, 3)
        A = seifert_presentation(V)
        inv = invert_over_fraction_field(A)
        n = len(A)
        for i in range(n):
            for j in range(n):
                s = RationalFunction(ZERO)
                for k in range(n):
                    s = s + inv[i][k] * A[k][j]
                assert s == RationalFunction(ONE if i == j else ZERO)


def test_presentation_determinant_is_alexander():
    rng = seeded(5)
    for _ in range(10):
        V = random_seifert_matrix(rng, rng.randint(1, 2), 4)
        d = det_laurent(seifert_presentation(V))
        lo, coeffs = trim(alexander_dense(V))
        assert d == LaurentPolynomial(coeffs).shift(lo)
