"""Parameter formulas, the diameter-3 family, and the classifier."""

from fractions import Fraction
from types import SimpleNamespace

import pytest

from drgspectra.classify import (
    ArrayNotInFamilyError,
    ParameterConstraintError,
    QSParameters,
    beta_of,
    chebyshev_T,
    classify,
    curtin_gap,
    curtin_gap_closed_form,
    d3_family,
    d3_family_matches,
    d4_contradiction_witness,
    eta_of,
    known_family_array,
    module_multiplicity,
    q_from_beta,
    qs_evaluate,
    s_from_array,
)
from drgspectra.classify import params as params_module
from drgspectra.classify.identities import run_identity_suite
from drgspectra.exactnum import AlgebraicReal, IntPolynomial, isolate_real_roots
from drgspectra.spectral import IntersectionArray

C7 = IntersectionArray((2, 1, 1), (1, 1, 1))
ODD7 = IntersectionArray((4, 3, 3), (1, 1, 2))
FC7 = IntersectionArray((7, 6, 5), (1, 2, 3))


# -- beta and Chebyshev ----------------------------------------------------


def test_beta_of_spot_values():
    assert beta_of(4, -3, 2, -1) == -2
    assert beta_of(7, 3, -1, -5) == 2
    assert beta_of(3, 1, -1, -3) == 2
    with pytest.raises(ValueError):
        beta_of(4, 1, 1, 0)


def test_chebyshev_polynomials():
    assert chebyshev_T(0).coeffs == (2,)
    assert chebyshev_T(1).coeffs == (0, 1)
    assert chebyshev_T(2).coeffs == (-2, 0, 1)
    assert chebyshev_T(3).coeffs == (0, -3, 0, 1)
    q = Fraction(3, 2)
    assert chebyshev_T(5)(q + 1 / q) == q**5 + q**-5
    with pytest.raises(ValueError):
        chebyshev_T(-1)


# -- (q, s) parametrization ------------------------------------------------


def test_qs_evaluate_spot_values():
    h, k, cs, thetas = qs_evaluate(QSParameters(Fraction(2), Fraction(0), 3))
    assert h == -62 and k == -62
    assert thetas[0] == k and thetas[3] == Fraction(-31, 4)
    h2, k2, _, _ = qs_evaluate(QSParameters(Fraction(2), Fraction(1), 3))
    assert h2 == Fraction(-62, 129) and k2 == Fraction(-62, 43)


def test_qs_constraints():
    assert QSParameters(Fraction(1), Fraction(0), 3).violated_constraints()
    assert QSParameters(Fraction(-1), Fraction(2), 3).violated_constraints()
    bad = QSParameters(Fraction(2), Fraction(1, 4), 3)  # s q^2 = 1
    assert "s*q^2 = 1" in bad.violated_constraints()
    with pytest.raises(ParameterConstraintError):
        bad.validate()
    good = QSParameters(Fraction(2), Fraction(1), 3)
    assert good.violated_constraints() == []
    with pytest.raises(ValueError):
        QSParameters(Fraction(2), Fraction(1), 2)


def test_q_from_beta():
    assert q_from_beta(Fraction(5, 2)) == 2
    q = q_from_beta(Fraction(-3))
    assert isinstance(q, AlgebraicReal)
    assert q.defining.coeffs == (1, 3, 1)
    lo, hi = q.refine(Fraction(1, 100))
    assert Fraction(-27, 10) < lo and hi < Fraction(-5, 2)
    for bad in (2, -2, Fraction(3, 2), 0):
        with pytest.raises(ParameterConstraintError):
            q_from_beta(Fraction(bad))


def test_s_from_array_round_trip():
    for q, s in ((Fraction(5, 2), Fraction(3, 7)), (Fraction(2), Fraction(0))):
        p = QSParameters(q, s, 3)
        _, k, cs, _ = qs_evaluate(p)
        arr = SimpleNamespace(D=3, k=k, c=cs)
        assert s_from_array(arr, q) == s


def test_s_from_array_rejects_foreign_arrays():
    with pytest.raises(ArrayNotInFamilyError):
        s_from_array(IntersectionArray((4, 3, 3), (1, 2, 3)), Fraction(5, 2))


# -- eta, xi, curtin gap, module multiplicity -------------------------------


def test_eta_spot_values():
    r = eta_of(Fraction(2), 3)
    assert r.eta == Fraction(-35, 4)
    # for D = 3, eta = -beta(beta+1)
    assert r.eta == -r.beta * (r.beta + 1)
    assert r.beta == Fraction(5, 2)
    assert not r.beta_integral and not r.eta_integral
    r4 = eta_of(Fraction(2), 4)
    assert r4.xi == Fraction(-2, 7)
    ri = eta_of(Fraction(-3), 3)
    assert ri.beta == Fraction(-10, 3)


def test_curtin_gap_values():
    assert curtin_gap(FC7, -5) == 0
    assert curtin_gap(FC7, 3) == -16
    assert curtin_gap(ODD7, 2) == -6
    assert curtin_gap(ODD7, -3) == -6  # c2 = 1 kills the theta term


def test_curtin_gap_closed_form_matches_direct():
    for q, s in ((Fraction(2), Fraction(1)), (Fraction(-3, 2), Fraction(2))):
        p = QSParameters(q, s, 3)
        _, k, cs, thetas = qs_evaluate(p)
        arr = SimpleNamespace(D=3, k=k, c=cs)
        assert curtin_gap(arr, thetas[3]) == curtin_gap_closed_form(p)


def test_module_multiplicity():
    p = QSParameters(Fraction(2), Fraction(1), 3)
    assert module_multiplicity(p) != 0
    # a numerator factor vanishing gives multiplicity exactly zero
    z = QSParameters(Fraction(2), Fraction(-1, 2), 3)  # 1 + s q = 0
    assert module_multiplicity(z) == 0
    with pytest.raises(ParameterConstraintError):
        module_multiplicity(QSParameters(Fraction(2), Fraction(-1, 128), 3))


def test_d4_contradiction_witness():
    xi, sign_value = d4_contradiction_witness(Fraction(2), 4)
    assert xi == Fraction(-2, 7)
    assert sign_value < 0
    with pytest.raises(ValueError):
        d4_contradiction_witness(Fraction(2), 3)
    with pytest.raises(ValueError):
        d4_contradiction_witness(Fraction(1, 2), 5)


# -- diameter-3 family -----------------------------------------------------


def test_d3_family_spot_values():
    p = d3_family(-2, 1)
    assert (p.k, p.c2, p.c3) == (4, 1, 2)
    assert p.thetas == (4, -3, 2, -1)
    assert p.array() == ODD7

    p = d3_family(2, 2)
    assert (p.k, p.c2, p.c3) == (7, 2, 3)
    assert p.thetas == (7, 3, -1, -5)
    assert p.array() == FC7

    p = d3_family(-3, 1)
    assert (p.k, p.c2, p.c3) == (41, 1, 14)
    assert p.thetas == (41, -16, 7, -5)
    assert p.array() == IntersectionArray((41, 40, 40), (1, 1, 14))


def test_d3_family_heptagon_beta():
    # beta = 2cos(2pi/7) (largest root of x^3 + x^2 - 2x - 1) gives C7
    beta = isolate_real_roots(IntPolynomial((-1, -2, 1, 1)))[2]
    p = d3_family(beta, 1)
    assert (p.k - 2).is_zero()
    assert (p.c3 - 1).is_zero()


def test_d3_family_validation():
    with pytest.raises(ValueError):
        d3_family(-3, 0)
    # infeasible point (negative c3): array() refuses it
    with pytest.raises(ValueError):
        d3_family(3, 1).array()


def test_d3_family_matches():
    assert d3_family_matches(ODD7, Fraction(-2), 1) is not None
    assert d3_family_matches(ODD7, Fraction(-3), 1) is None
    assert d3_family_matches(FC7, Fraction(2), 2) is not None


# -- known families and the classifier -------------------------------------


def test_known_family_arrays():
    assert known_family_array("Cycle", 3) == C7
    assert known_family_array("OddGraph", 3) == ODD7
    assert known_family_array("FoldedCube", 3) == FC7
    assert known_family_array("FoldedCube", 4) == IntersectionArray(
        (9, 8, 7, 6), (1, 2, 3, 4)
    )
    with pytest.raises(ValueError):
        known_family_array("Hamming", 3)


def test_classify_verdicts():
    assert classify(ODD7).describe() == "OddGraph(3)"
    assert classify(FC7).describe() == "FoldedCube(3)"
    assert classify(C7).describe() == "Cycle(3)"
    assert (
        classify(IntersectionArray((41, 40, 40), (1, 1, 14))).describe()
        == "D3Family(-3,1)"
    )
    h4 = IntersectionArray((4, 3, 2, 1), (1, 2, 3, 4))
    assert classify(h4).describe() == "NotAlmostBipartite"
    assert classify(IntersectionArray((3, 2, 2), (1, 1, 1))).describe() == (
        "NotQPolynomial"
    )
    with pytest.raises(ValueError):
        classify(IntersectionArray((2, 1), (1, 1)))


def test_classify_carries_evidence():
    c = classify(ODD7)
    assert c.verdict == "OddGraph"
    assert len(c.orderings) == 1
    assert c.betas == [-2]
    assert c.spectral is not None


# -- identity suites -------------------------------------------------------


def test_identity_suite_passes():
    results = run_identity_suite(60, 42, dmax=6)
    assert len(results) == 7
    for r in results:
        assert r.passed, (r.name, r.detail)


def test_identity_suite_catches_mutation(monkeypatch):
    real = params_module.eta_of

    def corrupted(q, D):
        r = real(q, D)
        return type(r)(
            eta=r.eta + 1,
            xi=r.xi + 1,
            beta=r.beta,
            beta_integral=r.beta_integral,
            eta_integral=r.eta_integral,
        )

    monkeypatch.setattr(params_module, "eta_of", corrupted)
    results = run_identity_suite(20, 42, dmax=5, names=["xi_closed_form"])
    assert len(results) == 1 and not results[0].passed
