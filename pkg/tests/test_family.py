import json

import pytest

from sliceobs.errors import InvalidInputError
from sliceobs.family import (
    CONCLUSION,
    EXTERNAL,
    VERIFIED,
    ObstructionReport,
    cover_exponent,
    distinctness_check,
    expected_delta,
    family_expected,
    family_m,
    family_params,
    family_seifert,
    obstruction_report,
)
from sliceobs.exact.intmat import AbelianGroup
from sliceobs.exact.laurent import T
from sliceobs.seifert import alexander_polynomial

from oracles import alexander_dense

PRIMES = [2, 3, 5, 7, 11, 13]


def test_params():
    assert family_params(1).odd_regime
    assert not family_params(4).odd_regime
    for bad in (0, -2, 1.5, "3"):
        with pytest.raises(InvalidInputError):
            family_params(bad)


def test_seifert_and_recovery():
    V = family_seifert(3)
    assert V.rows() == [[0, 4], [3, 0]] and V.name == "K_3"
    assert family_m(V) == 3
    assert family_m([[-1, 1], [0, -1]]) is None


@pytest.mark.parametrize("m", range(1, 21))
def test_closed_form_delta(m):
    # det(tV - V^T) for [[0, m+1], [m, 0]] by hand: -(m+1 t - m)(m t - (m+1))
    assert alexander_dense(family_seifert(m).rows()) == \
        [-(m + 1) * m, (m + 1) ** 2 + m * m, -m * (m + 1)]
    assert expected_delta(m) == (((m + 1) * T - m) * (m * T - (m + 1))).normalize()
    assert alexander_polynomial(family_seifert(m)) == expected_delta(m)


def test_cover_closed_forms():
    assert [cover_exponent(1, r) for r in PRIMES] == [3, 7, 31, 127, 2047, 8191]
    assert cover_exponent(3, 2) == 7 and cover_exponent(3, 3) == 37
    e = family_expected(1, 3)
    assert e.cover_group == AbelianGroup((7, 7)) and e.n_r == 7
    assert family_expected(2, 1).cover_group == AbelianGroup()


def test_distinctness():
    assert distinctness_check(range(1, 21))
    with pytest.raises(InvalidInputError):
        distinctness_check([1, 2, 2])


def test_full_report_m1():
    rep = obstruction_report(1, PRIMES)
    assert rep.ok and rep.conclusion == CONCLUSION
    names = [c.name for c in rep.checks]
    assert names[:4] == ["alexander-polynomial", "rational-alexander-module",
                         "blanchfield-metabolisers", "branched-covers"]
    assert len(rep.external) == 4
    assert all(c.status == VERIFIED for c in rep.checks[:4])
    assert all(c.status == EXTERNAL and c.payload["citation"] for c in rep.external)
    assert [s.r for s in rep.covers] == PRIMES
    for sub in rep.covers:
        got = [c.name for c in sub.checks]
        want = ["cover-group", "generator-lifts", "deck-invariance", "odd-order"]
        if sub.r == 2:
            want.append("linking-form-metabolisers")
        assert got == want
        assert all(c.status == VERIFIED for c in sub.checks)


def test_report_round_trip_and_determinism():
    a = obstruction_report(3, [2, 3])
    b = obstruction_report(3, [2, 3])
    assert a.to_json() == b.to_json()
    assert ObstructionReport.from_json(a.to_json()) == a
    assert json.loads(a.to_json())["covers"][1]["checks"][0]["payload"]["N_r"] == 37


def test_even_m_warns():
    rep = obstruction_report(2, [2, 3])
    assert rep.ok
    assert rep.warnings == ("theorem regime restricts to odd m",)


@pytest.mark.parametrize("degrees", [[4], [2, 2], [1], [0]])
def test_bad_degrees(degrees):
    with pytest.raises(InvalidInputError):
        obstruction_report(1, degrees)


def test_mismatch_aborts_with_failed_step(monkeypatch):
    import sliceobs.family as fam
    monkeypatch.setattr(fam, "expected_delta", lambda m: T ** 2 + 1)
    rep = obstruction_report(1, [2])
    assert not rep.ok
    assert rep.conclusion == "aborted: alexander-polynomial failed"
    failed = rep.failed[0]
    assert failed.payload["expected"] == "t^2 + 1"
    assert not rep.external
