"""
The knots K_m with Seifert matrix [[0, m+1], [m, 0]], their closed-form
invariants, and the obstruction report that re-derives each computable step
of the non-approximability argument while naming the steps that rest on
4-dimensional or Heegaard Floer input.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .alexander_module import (
    BlanchfieldPairing,
    MetaboliserLookupError,
    RationalAlexanderModule,
    Submodule,
    metabolisers,
    radical,
    unique_metaboliser_containing,
)
from .branched_cover import (
    CoverPresentation,
    cover_order_resultant,
    deck_image,
    double_cover_class,
    double_cover_linking_form,
    is_z2_homology_sphere,
    lifted_generator,
    linking_metabolisers,
)
from .errors import InvalidInputError, VerificationError
from .exact.intmat import AbelianGroup, enumerate_subgroups, subgroup_contains, subgroup_order
from .exact.laurent import LaurentPolynomial
from .seifert import alexander_polynomial, classical_invariants, validate_seifert

VERIFIED = "verified"
FAILED = "failed"
EXTERNAL = "external-assumption"

CONCLUSION = "contradiction schema complete modulo external steps"

EXTERNAL_STEPS = (
    ("topological-slice-disc",
     "Freedman 1984: Alexander polynomial one knots are topologically slice; "
     "Delta(Wh(T_{2,3})) = 1 supplies the locally flat disc D_m"),
    ("smooth-slice-disc",
     "K_m is smoothly slice via a band move to a two-component unlink capped by two discs"),
    ("prime-selection",
     "Cha-Kim 2021 Lemma 5.2 and Cha 2021 p.17: <alpha_1> = ker(iota) gives a prime r with "
     "ker(H_1(Sigma_r) -> H_1(V_r)) generated by x_1"),
    ("d-invariant-obstruction",
     "Grigsby-Ruberman-Strle 2008 Thm 1.1 forces d(Sigma_r, s + k x_1^) = 0 for a smooth disc; "
     "Cha-Kim 2021 Thm 5.4 and Cha 2021 Lemma 4.1 give some k with d != 0"),
)

METABOLISER_PREMISE = ("the kernel of iota is a Blanchfield metaboliser for any slice disc "
                       "(Cochran-Orr-Teichner 1999 Thm 4.4; Hillman 2012 Thm 2.4)")


@dataclass(frozen=True)
class FamilyParams:
    m: int
    odd_regime: bool


def family_params(m):
    if not isinstance(m, int) or m < 1:
        raise InvalidInputError(f"m must be an integer >= 1, got {m!r}")
    return FamilyParams(m, m % 2 == 1)


def family_seifert(m):
    family_params(m)
    return validate_seifert([[0, m + 1], [m, 0]], name=f"K_{m}")


def family_m(V):
    """Recover m when V is exactly a family matrix, else None."""
    rows = validate_seifert(V).rows()
    if len(rows) == 2 and rows[0][0] == rows[1][1] == 0 and rows[1][0] >= 1 \
            and rows[0][1] == rows[1][0] + 1:
        return rows[1][0]
    return None


def expected_delta(m):
    t = LaurentPolynomial.monomial()
    return (((m + 1) * t - m) * (m * t - (m + 1))).normalize()


def cover_exponent(m, r):
    """N_r = (m+1)^r - m^r."""
    return (m + 1) ** r - m ** r


@dataclass(frozen=True)
class FamilyExpectation:
    delta: LaurentPolynomial
    cover_group: AbelianGroup
    n_r: int


def family_expected(m, r):
    """Closed forms only; no matrix computation."""
    family_params(m)
    if r < 1:
        raise InvalidInputError(f"cover degree must be >= 1, got {r}")
    n = cover_exponent(m, r)
    group = AbelianGroup((n, n)) if n > 1 else AbelianGroup()
    return FamilyExpectation(expected_delta(m), group, n)


def distinctness_check(m_list):
    """True iff the Alexander polynomials of the listed K_m are pairwise distinct up to units."""
    m_list = list(m_list)
    if len(set(m_list)) != len(m_list):
        raise InvalidInputError("duplicate m in distinctness check")
    polys = [alexander_polynomial(family_seifert(m)) for m in m_list]
    return len({p.normalize() for p in polys}) == len(polys)


def alpha_labels(module, m):
    """Generator indices (1-based) for alpha_1 and alpha_2.

    alpha_1 is the generator class annihilated by mt - (m+1), alpha_2 the one
    annihilated by (m+1)t - m.
    """
    t = LaurentPolynomial.monomial()
    targets = [(m * t - (m + 1)).monic(), ((m + 1) * t - m).monic()]
    found = []
    for target in targets:
        idx = [i + 1 for i, g in enumerate(module.generator_classes)
               if any(g) and module.annihilator(g) == target]
        if len(idx) != 1:
            raise VerificationError(f"no unique generator with annihilator {target}")
        found.append(idx[0])
    return tuple(found)


def _is_prime(n):
    return n >= 2 and all(n % p for p in range(2, math.isqrt(n) + 1))


def _modinv(a, n):
    return pow(a, -1, n)


# -- report structure -----------------------------------------------------------

@dataclass(frozen=True)
class Check:
    name: str
    status: str
    payload: dict = field(default_factory=dict)

    def to_dict(self):
        return {"name": self.name, "status": self.status, "payload": self.payload}

    @classmethod
    def from_dict(cls, d):
        return cls(d["name"], d["status"], d["payload"])


@dataclass(frozen=True)
class CoverSubreport:
    r: int
    checks: tuple

    def to_dict(self):
        return {"r": self.r, "checks": [c.to_dict() for c in self.checks]}

    @classmethod
    def from_dict(cls, d):
        return cls(d["r"], tuple(Check.from_dict(c) for c in d["checks"]))


@dataclass(frozen=True)
class ObstructionReport:
    m: int
    odd_regime: bool
    cover_degrees: tuple
    checks: tuple
    covers: tuple
    warnings: tuple = ()
    conclusion: str = CONCLUSION

    @property
    def failed(self):
        return [c for c in self.all_checks() if c.status == FAILED]

    @property
    def ok(self):
        return not self.failed

    def all_checks(self):
        yield from self.checks
        for sub in self.covers:
            yield from sub.checks

    @property
    def external(self):
        return [c for c in self.checks if c.status == EXTERNAL]

    def to_dict(self):
        return {
            "m": self.m,
            "odd_regime": self.odd_regime,
            "cover_degrees": list(self.cover_degrees),
            "warnings": list(self.warnings),
            "checks": [c.to_dict() for c in self.checks],
            "covers": [s.to_dict() for s in self.covers],
            "conclusion": self.conclusion,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(d["m"], d["odd_regime"], tuple(d["cover_degrees"]),
                   tuple(Check.from_dict(c) for c in d["checks"]),
                   tuple(CoverSubreport.from_dict(s) for s in d["covers"]),
                   tuple(d["warnings"]), d["conclusion"])

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


class _Abort(Exception):
    def __init__(self, check, sub=None):
        self.check = check
        self.sub = sub


def _check(name, ok, payload, expected=None, computed=None):
    payload = dict(payload)
    if not ok:
        if expected is not None:
            payload["expected"] = expected
        if computed is not None:
            payload["computed"] = computed
        raise _Abort(Check(name, FAILED, payload))
    return Check(name, VERIFIED, payload)


def _fmt_vec(v):
    return "(" + ", ".join(str(x) for x in v) + ")"


def _fmt_sub(P):
    return "span{" + ", ".join(_fmt_vec(b) for b in P.basis) + "}"


# -- the individual steps -----------------------------------------------------------

def _step_alexander(m, V):
    delta = alexander_polynomial(V)
    exp = expected_delta(m)
    inv = classical_invariants(V)
    return _check("alexander-polynomial", delta == exp, {
        "delta": str(delta),
        "closed_form": f"({m + 1}t - {m})({m if m > 1 else ''}t - {m + 1})",
        "determinant": inv.determinant,
        "signature": inv.signature,
    }, expected=str(exp), computed=str(delta))


def _step_module(m, module):
    t = LaurentPolynomial.monomial()
    expected = sorted([str((m * t - (m + 1)).monic()), str(((m + 1) * t - m).monic())])
    factors = sorted(str(c.factor) for c in module.primary_decomposition)
    ok = (module.q_dimension == 2 and module.primary_complete and factors == expected
          and all(c.multiplicity == 1 for c in module.primary_decomposition))
    a1, a2 = alpha_labels(module, m) if ok else (None, None)
    return _check("rational-alexander-module", ok, {
        "q_dimension": module.q_dimension,
        "primary_factors": factors,
        "decomposition": "Q + Q",
        "alpha_1": f"e{a1}",
        "alpha_1_annihilator": str((m * t - (m + 1)).monic()),
        "alpha_2": f"e{a2}",
        "alpha_2_annihilator": str(((m + 1) * t - m).monic()),
    }, expected={"q_dimension": 2, "primary_factors": expected},
        computed={"q_dimension": module.q_dimension, "primary_factors": factors}), (a1, a2)


def _step_metabolisers(m, module, pairing, labels):
    a1 = module.generator_classes[labels[0] - 1]
    a2 = module.generator_classes[labels[1] - 1]
    P1 = Submodule.generated_by(module, [a1])
    P2 = Submodule.generated_by(module, [a2])
    rad = radical(module, pairing)
    mets = metabolisers(module, pairing)
    kernel = unique_metaboliser_containing(module, pairing, a1)
    try:
        unique_metaboliser_containing(module, pairing, tuple(x + y for x, y in zip(a1, a2)))
        sum_rejected = False
    except MetaboliserLookupError:
        sum_rejected = True
    ok = (rad.dimension == 0 and set(mets) == {P1, P2} and len(mets) == 2
          and kernel == P1 and kernel.dimension == 1 and sum_rejected
          and pairing.is_hermitian())
    return _check("blanchfield-metabolisers", ok, {
        "hermitian": pairing.is_hermitian(),
        "radical_dimension": rad.dimension,
        "metabolisers": [_fmt_sub(P) for P in mets],
        "alpha_1_span": _fmt_sub(P1),
        "alpha_2_span": _fmt_sub(P2),
        "unique_metaboliser_containing_alpha_1": _fmt_sub(kernel),
        "kernel_dimension": kernel.dimension,
        "alpha_1_plus_alpha_2_in_no_metaboliser": sum_rejected,
        "premise": METABOLISER_PREMISE,
    }, expected={"metabolisers": [_fmt_sub(P1), _fmt_sub(P2)], "radical_dimension": 0},
        computed={"metabolisers": [_fmt_sub(P) for P in mets],
                  "radical_dimension": rad.dimension})


def _cover_subreport(m, V, r, labels):
    checks = []
    try:
        _cover_checks(m, V, r, labels, checks)
    except _Abort as a:
        raise _Abort(a.check, CoverSubreport(r, tuple(checks) + (a.check,)))
    return CoverSubreport(r, tuple(checks))


def _cover_checks(m, V, r, labels, checks):
    expected = family_expected(m, r)
    n = expected.n_r
    cover = CoverPresentation(V, r)
    oracle = cover_order_resultant(V, r)
    checks.append(_check("cover-group", cover.group == expected.cover_group and oracle == n * n, {
        "group": str(cover.group),
        "N_r": n,
        "resultant_order": oracle,
    }, expected=str(expected.cover_group), computed=str(cover.group)))

    x1 = lifted_generator(cover, labels[0])
    x2 = lifted_generator(cover, labels[1])
    d = cover.group.invariant_factors
    spans_all = subgroup_order([list(x1.coords), list(x2.coords)], d) == cover.group.order
    checks.append(_check("generator-lifts", x1.order == n and x2.order == n and spans_all, {
        "x_1": f"lift of e{labels[0]}",
        "x_2": f"lift of e{labels[1]}",
        "order_x_1": x1.order,
        "order_x_2": x2.order,
        "x_1_x_2_generate": spans_all,
    }, expected={"order_x_1": n, "order_x_2": n}, computed={"order_x_1": x1.order,
                                                             "order_x_2": x2.order}))

    c1 = (m + 1) * _modinv(m, n) % n
    c2 = m * _modinv(m + 1, n) % n
    t1, t2 = deck_image(cover, x1), deck_image(cover, x2)
    inv1 = subgroup_contains([list(x1.coords)], d, t1.coords)
    inv2 = subgroup_contains([list(x2.coords)], d, t2.coords)
    ok = t1 == c1 * x1 and t2 == c2 * x2 and inv1 and inv2
    checks.append(_check("deck-invariance", ok, {
        "deck_x_1": f"{c1} * x_1",
        "deck_x_2": f"{c2} * x_2",
        "x_1_span_invariant": inv1,
        "x_2_span_invariant": inv2,
    }))

    odd = is_z2_homology_sphere(V, r)
    checks.append(_check("odd-order", odd and cover.group.order % 2 == 1, {
        "order": cover.group.order,
        "z2_homology_sphere": odd,
        "spin_structures": 1,
    }))

    if r == 2:
        lf = double_cover_linking_form(V)
        l1 = double_cover_class(cover, lf, x1)
        l2 = double_cover_class(cover, lf, x2)
        mets = linking_metabolisers(lf)
        gens = [list(mt.generators) for mt in mets]
        ld = lf.group.invariant_factors
        has1 = any(subgroup_order(g, ld) == subgroup_order(g + [list(l1)], ld) for g in gens)
        has2 = any(subgroup_order(g, ld) == subgroup_order(g + [list(l2)], ld) for g in gens)
        exact_pair = len(mets) == 2 if _is_prime(n) else True
        lines = len(enumerate_subgroups(ld, n))
        checks.append(_check("linking-form-metabolisers", has1 and has2 and exact_pair, {
            "linking_form": [[str(x) for x in row] for row in lf.gram],
            "subgroups_of_order_N": lines,
            "metabolisers": [[_fmt_vec(g) for g in mt.generators] for mt in mets],
            "x_1": _fmt_vec(l1),
            "x_2": _fmt_vec(l2),
            "contains_x_1_span": has1,
            "contains_x_2_span": has2,
        }))


def obstruction_report(m, cover_degrees):
    """Run every computable step for K_m and the requested prime cover degrees."""
    params = family_params(m)
    degrees = tuple(cover_degrees)
    for r in degrees:
        if not isinstance(r, int) or not _is_prime(r):
            raise InvalidInputError(f"cover degrees must be prime, got {r!r}")
    if len(set(degrees)) != len(degrees):
        raise InvalidInputError("duplicate cover degree")
    warnings = () if params.odd_regime else ("theorem regime restricts to odd m",)
    V = family_seifert(m)
    checks, covers = [], []

    def done(conclusion):
        return ObstructionReport(m, params.odd_regime, degrees, tuple(checks), tuple(covers),
                                 warnings, conclusion)

    try:
        checks.append(_step_alexander(m, V))
        module = RationalAlexanderModule(V)
        step, labels = _step_module(m, module)
        checks.append(step)
        pairing = BlanchfieldPairing(V, module)
        checks.append(_step_metabolisers(m, module, pairing, labels))
        for r in degrees:
            covers.append(_cover_subreport(m, V, r, labels))
        checks.append(Check("branched-covers", VERIFIED, {
            "degrees": list(degrees),
            "groups": [str(family_expected(m, r).cover_group) for r in degrees],
        }))
    except _Abort as a:
        if a.sub is not None:
            covers.append(a.sub)
        else:
            checks.append(a.check)
        return done(f"aborted: {a.check.name} failed")
    for name, cite in EXTERNAL_STEPS:
        checks.append(Check(name, EXTERNAL, {"citation": cite}))
    return done(CONCLUSION)
