import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sliceobs.exact import linalg
from sliceobs.exact.intmat import (
    AbelianGroup,
    det_int,
    element_order,
    enumerate_subgroups,
    kron,
    smith_normal_form_int,
    subgroup_contains,
    subgroup_elements,
    subgroup_order,
)

from oracles import all_elements, cyclic_subgroup, det_cofactor, invariant_factors_oracle


def int_matrices(max_rows=4, max_cols=4, bound=9):
    return st.integers(1, max_rows).flatmap(
        lambda n: st.integers(1, max_cols).flatmap(
            lambda m: st.lists(st.lists(st.integers(-bound, bound), min_size=m, max_size=m),
                               min_size=n, max_size=n)))


def square_matrices(max_n=5, bound=9):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(st.integers(-bound, bound), min_size=n, max_size=n),
                           min_size=n, max_size=n))


@given(int_matrices())
@settings(max_examples=150)
def test_smith_form_matches_determinantal_divisors(M):
    snf = smith_normal_form_int(M)
    assert snf.diagonal == invariant_factors_oracle(M)


@given(int_matrices())
@settings(max_examples=150)
def test_smith_transforms(M):
    snf = smith_normal_form_int(M)
    assert linalg.matmul(linalg.matmul(snf.U, M), snf.W) == snf.D
    n = len(M)
    assert linalg.matmul(snf.U, snf.U_inv) == linalg.identity(n)
    assert abs(det_int(snf.U)) == 1 and abs(det_int(snf.W)) == 1
    d = snf.diagonal
    nz = [x for x in d if x]
    assert all(x > 0 for x in nz)
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    # zeros come last
    assert d == nz + [0] * (len(d) - len(nz))


@given(square_matrices())
def test_bareiss_determinant(M):
    assert det_int(M) == det_cofactor(M)
    assert linalg.det(M) == det_cofactor(M)


def test_small_smith_examples():
    assert smith_normal_form_int([[2, 0], [0, 3]]).diagonal == [1, 6]
    assert smith_normal_form_int([[-2, 1], [1, -2]]).diagonal == [1, 3]
    assert smith_normal_form_int([[0, 0], [0, 0]]).diagonal == [0, 0]


def test_kron():
    assert kron([[1, 2]], [[0, 1], [1, 0]]) == [[0, 1, 0, 2], [1, 0, 2, 0]]


@given(square_matrices(4, 5))
def test_rational_inverse(M):
    if det_cofactor(M) == 0:
        with pytest.raises(ZeroDivisionError):
            linalg.inverse(M)
        return
    Minv = linalg.inverse(M)
    assert linalg.matmul(M, Minv) == linalg.identity(len(M))


def test_nullspace_and_rank():
    M = [[1, 2, 3], [2, 4, 6]]
    assert linalg.rank(M) == 1
    ns = linalg.nullspace(M, 3)
    assert len(ns) == 2
    for v in ns:
        assert linalg.matvec(M, v) == [0, 0]


# -- abelian groups ---------------------------------------------------------------

@pytest.mark.parametrize("text,factors,free", [
    ("0", (), 0),
    ("Z/3", (3,), 0),
    ("(Z/7)^2", (7, 7), 0),
    ("Z^2 + Z/3", (3,), 2),
    ("Z + Z/2 + Z/4", (2, 4), 1),
])
def test_group_string_round_trip(text, factors, free):
    G = AbelianGroup.parse(text)
    assert G == AbelianGroup(factors, free)
    assert str(G) == text
    assert AbelianGroup.from_dict(G.to_dict()) == G


def test_group_validation_and_order():
    with pytest.raises(ValueError):
        AbelianGroup((2, 3))
    with pytest.raises(ValueError):
        AbelianGroup((1,))
    assert AbelianGroup((7, 7)).order == 49
    assert AbelianGroup((3,), 1).order is None
    assert AbelianGroup.cokernel([[2, 0], [0, 3]]) == AbelianGroup((6,))
    assert AbelianGroup.cokernel([[2], [0]]) == AbelianGroup((2,), 1)


@given(int_matrices(3, 3, 6))
def test_cokernel_order_is_gcd_of_maximal_minors(M):
    G = AbelianGroup.cokernel(M)
    dd = invariant_factors_oracle(M)
    if len(M) > len(M[0]) or 0 in dd:
        assert not G.is_finite
    else:
        assert G.order == abs(math.prod(dd))


@pytest.mark.parametrize("d", [(2, 2), (2, 4), (3, 3), (2, 6), (4,), (2, 2, 2), (5, 5)])
def test_subgroup_enumeration_against_brute_force(d):
    elements = all_elements(d)
    # every subgroup needs at most len(d) generators
    subgroups = set()
    for gens in itertools.combinations_with_replacement(elements, len(d)):
        S = frozenset(subgroup_elements(gens, d))
        subgroups.add(S)
    total = math.prod(d)
    for order in range(1, total + 1):
        want = {S for S in subgroups if len(S) == order}
        got = [frozenset(subgroup_elements(g, d)) for g in enumerate_subgroups(d, order)]
        assert len(got) == len(set(got))
        assert set(got) == want


def test_subgroup_helpers():
    d = (3, 3)
    assert subgroup_order([(1, 0)], d) == 3
    assert subgroup_order([(1, 0), (0, 1)], d) == 9
    assert subgroup_contains([(1, 2)], d, (2, 1))
    assert not subgroup_contains([(1, 2)], d, (1, 1))
    assert element_order((2, 0), (4, 6)) == 2
    assert set(subgroup_elements([(1, 1)], d)) == cyclic_subgroup((1, 1), d)
