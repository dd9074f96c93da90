"""The (q, s) parametrization of almost-bipartite Q-polynomial arrays and
the derived quantities beta, eta, xi, with all of their validity
restrictions and identities.

All evaluation is exact; scalars may be rationals or number-field
elements (for irrational q)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from ..exactnum import (
    AlgebraicReal,
    FieldElement,
    IntPolynomial,
    NumberField,
    isolate_real_roots,
)
from ..spectral.arrays import IntersectionArray

Scalar = Union[Fraction, FieldElement]


class ParameterConstraintError(ValueError):
    """A (q, s) validity constraint is violated; names the constraint."""


def _frac(x) -> Scalar:
    return Fraction(x) if isinstance(x, int) else x


def _is_zero(x: Scalar) -> bool:
    return x == 0 if isinstance(x, Fraction) else x.is_zero()


def _as_fraction(x: Scalar) -> Optional[Fraction]:
    return x if isinstance(x, Fraction) else x.as_fraction()


def _inv(x: Scalar) -> Scalar:
    return 1 / x if isinstance(x, Fraction) else x.inverse()


def beta_of(t0: Scalar, t1: Scalar, t2: Scalar, t3: Scalar) -> Scalar:
    """beta = (theta0 - theta3)/(theta1 - theta2) - 1."""
    t0, t1, t2, t3 = map(_frac, (t0, t1, t2, t3))
    d = t1 - t2
    if _is_zero(d):
        raise ValueError("beta_of needs theta1 != theta2")
    return (t0 - t3) * _inv(d) - 1


def chebyshev_T(i: int) -> IntPolynomial:
    """T_0 = 2, T_1 = x, T_{i+1} = x T_i - T_{i-1}; T_i(q + 1/q) = q^i + q^-i."""
    if i < 0:
        raise ValueError("index must be nonnegative")
    prev = IntPolynomial((2,))
    if i == 0:
        return prev
    cur = IntPolynomial.x()
    for _ in range(i - 1):
        prev, cur = cur, IntPolynomial.x() * cur - prev
    return cur


@dataclass(frozen=True)
class QSParameters:
    """Exact (q, s, D) with D >= 3; h and everything else is derived."""

    q: Scalar
    s: Scalar
    D: int

    def __post_init__(self):
        if self.D < 3:
            raise ValueError("parametrization needs D >= 3")
        q = self.q
        if isinstance(q, AlgebraicReal):
            r = q.as_rational()
            q = r if r is not None else NumberField.from_algebraic(q).gen()
        object.__setattr__(self, "q", _frac(q))
        object.__setattr__(self, "s", _frac(self.s))

    def violated_constraints(self) -> List[str]:
        q, s, D = self.q, self.s, self.D
        out = []
        if _is_zero(q):
            out.append("q = 0")
            return out
        qp = _frac(1)
        for i in range(1, 2 * D + 2):
            qp = qp * q
            if i <= 2 * D and _is_zero(qp - 1):
                out.append(f"q^{i} = 1")
            if 2 <= i <= 2 * D and _is_zero(s * qp - 1):
                out.append(f"s*q^{i} = 1")
            if _is_zero(s * qp + 1):
                out.append(f"s*q^{i} = -1")
        return out

    def validate(self) -> "QSParameters":
        bad = self.violated_constraints()
        if bad:
            raise ParameterConstraintError(
                "invalid (q, s) parameters: " + "; ".join(bad)
            )
        return self


def qs_evaluate(p: QSParameters) -> Tuple[Scalar, Scalar, List[Scalar], List[Scalar]]:
    """Exact (h, k, [c_1..c_D], [theta_0..theta_D]) for valid parameters."""
    p.validate()
    q, s, D = p.q, p.s, p.D
    qpow = [_frac(1)]
    for _ in range(2 * D + 2):
        qpow.append(qpow[-1] * q)
    qinv = _inv(q)
    h = (q - qpow[2 * D]) * _inv((q - 1) * (1 + s * qpow[2 * D + 1]))
    k = h * (1 + s * q)
    cs: List[Scalar] = []
    for i in range(1, D + 1):
        num = h * (1 - qpow[i]) * (1 + s * qpow[2 * D + 2 - i])
        den = qpow[i] * (qpow[2 * D - 2 * i + 1] - 1)
        cs.append(num * _inv(den))
    thetas: List[Scalar] = []
    qi = _frac(1)
    for i in range(D + 1):
        thetas.append(h * qi * (1 + s * qpow[2 * i + 1]))
        qi = qi * qinv
    return h, k, cs, thetas


def q_from_beta(beta: Fraction) -> Union[Fraction, AlgebraicReal]:
    """Solve beta = q + 1/q for the root with |q| > 1.

    beta in {-2, 2} is rejected (forces q^2 = 1) and |beta| < 2 is
    rejected (q would be non-real)."""
    beta = Fraction(beta)
    if beta == 2 or beta == -2:
        raise ParameterConstraintError(
            f"beta = {beta} forces q = {beta // 2}, violating q^i != 1"
        )
    if abs(beta) < 2:
        raise ParameterConstraintError(
            f"beta = {beta} gives non-real q (needs |beta| > 2)"
        )
    disc = beta * beta - 4
    root = _rational_sqrt(disc)
    if root is not None:
        q = (beta + root) / 2 if beta > 0 else (beta - root) / 2
        return q
    poly = IntPolynomial.from_fractions([Fraction(1), -beta, Fraction(1)])
    roots = isolate_real_roots(poly)
    assert len(roots) == 2
    return roots[1] if beta > 0 else roots[0]


def _rational_sqrt(x: Fraction) -> Optional[Fraction]:
    if x < 0:
        return None
    pn = _isqrt_exact(x.numerator)
    pd = _isqrt_exact(x.denominator)
    if pn is None or pd is None:
        return None
    return Fraction(pn, pd)


def _isqrt_exact(n: int) -> Optional[int]:
    import math

    r = math.isqrt(n)
    return r if r * r == n else None


class ArrayNotInFamilyError(ValueError):
    """s recovered from k does not reproduce the full array."""


def s_from_array(arr, q: Scalar) -> Scalar:
    """Invert the parametrization: substitute h into k and solve the
    linear equation for s, then verify the whole array.

    arr is an IntersectionArray, or any object with D, k and c
    attributes (k and c entries may be exact rationals)."""
    q = _frac(q)
    D = arr.D
    k = Fraction(arr.k)
    qpow = [_frac(1)]
    for _ in range(2 * D + 2):
        qpow.append(qpow[-1] * q)
    # k (q-1)(1 + s q^{2D+1}) = (q - q^{2D})(1 + s q)
    lin = k * (q - 1) * qpow[2 * D + 1] - (q - qpow[2 * D]) * q
    rhs = (q - qpow[2 * D]) - k * (q - 1)
    if _is_zero(lin):
        raise ParameterConstraintError("degenerate linear equation for s")
    s = rhs * _inv(lin)
    params = QSParameters(q, s, D)
    _, k2, cs, _ = qs_evaluate(params)
    if not _is_zero(k2 - k):
        raise AssertionError("s inversion failed to reproduce k")
    mismatches = [
        i + 1 for i, ci in enumerate(cs) if not _is_zero(ci - Fraction(arr.c[i]))
    ]
    if mismatches:
        raise ArrayNotInFamilyError(
            f"array not in parametrized family for this q: c_i mismatch at "
            f"i = {mismatches}"
        )
    return s


@dataclass(frozen=True)
class EtaReport:
    """eta, xi = eta + beta^2 - 1, integrality verdicts, and (when the
    caller supplies enough context) the gap and s^2-restriction verdicts."""

    eta: Scalar
    xi: Scalar
    beta: Scalar
    beta_integral: bool
    eta_integral: bool
    curtin_nonzero: Optional[bool] = None  # gap at theta_D, given an array
    s_square_restriction_ok: Optional[bool] = None  # s^2 q^{2D+3} != 1, given s


def eta_of(q: Scalar, D: int) -> EtaReport:
    """eta = -(q^2+1)(q^{2D} - q^3)/(q^{2D} - q^5), with the closed form
    of xi cross-verified exactly."""
    q = _frac(q)
    if D < 3:
        raise ValueError("eta needs D >= 3")
    q2d = q ** (2 * D) if isinstance(q, FieldElement) else q ** (2 * D)
    q2 = q * q
    q3 = q2 * q
    q5 = q3 * q2
    den = q2d - q5
    if _is_zero(den) or _is_zero(q):
        raise ParameterConstraintError("eta undefined: q^{2D} = q^5 or q = 0")
    eta = -(q2 + 1) * (q2d - q3) * _inv(den)
    beta = q + _inv(q)
    xi = eta + beta * beta - 1
    # identity: xi = (q^{2D} - q^9)/(q^{2D+2} - q^7)
    q7 = q5 * q2
    q9 = q7 * q2
    closed = (q2d - q9) * _inv(q2d * q2 - q7)
    if not _is_zero(xi - closed):
        raise AssertionError("xi closed-form identity failed")
    bi = _as_fraction(beta)
    ei = _as_fraction(eta)
    return EtaReport(
        eta=eta,
        xi=xi,
        beta=beta,
        beta_integral=bi is not None and bi.denominator == 1,
        eta_integral=ei is not None and ei.denominator == 1,
    )


def curtin_gap(arr: IntersectionArray, theta: Scalar) -> Scalar:
    """(c2 - 1) theta^2 - (k - c2)(k - 2); zero flags the 2-homogeneous
    obstruction."""
    theta = _frac(theta)
    k = Fraction(arr.k)
    c2 = Fraction(arr.c[1]) if arr.D >= 2 else Fraction(0)
    return (c2 - 1) * theta * theta - (k - c2) * (k - 2)


def curtin_gap_closed_form(p: QSParameters) -> Scalar:
    """The closed form of the gap at theta_D as a rational function of
    (q, s)."""
    p.validate()
    q, s, D = p.q, p.s, p.D
    qpow = [_frac(1)]
    for _ in range(2 * D + 4):
        qpow.append(qpow[-1] * q)
    q2d = qpow[2 * D]
    num = (
        (q2d - 1)
        * (q2d - qpow[2])
        * (q2d - q) ** 2
        * (s * s * qpow[2 * D + 3] - 1)
    )
    den = (
        q2d
        * (q - 1) ** 2
        * (q2d - qpow[3])
        * (1 + s * qpow[2 * D + 1]) ** 2
    )
    if _is_zero(den):
        raise ParameterConstraintError("curtin gap denominator vanishes")
    return num * _inv(den)


def module_multiplicity(p: QSParameters) -> Scalar:
    """Multiplicity of the distinguished endpoint-2 module in the standard
    module; its nonvanishing is what the argument needs."""
    q, s, D = p.q, p.s, p.D
    qpow = [_frac(1)]
    for _ in range(2 * D + 5):
        qpow.append(qpow[-1] * q)
    q2d = qpow[2 * D]
    factors = {
        "q": q,
        "q+1": q + 1,
        "(q-1)^2": (q - 1) ** 2,
        "s^2*q^{2D+4}-1": s * s * qpow[2 * D + 4] - 1,
        "1+s*q^{2D}": 1 + s * q2d,
        "1+s*q^{2D+1}": 1 + s * qpow[2 * D + 1],
    }
    zero = [name for name, v in factors.items() if _is_zero(v)]
    if zero:
        raise ParameterConstraintError(
            "module multiplicity denominator vanishes: " + ", ".join(zero)
        )
    num = (
        (q2d - 1)
        * (q2d - qpow[2])
        * (1 + s * q)
        * (1 + s * qpow[4])
        * (s * s * qpow[2 * D + 3] - 1)
    )
    den = _frac(1)
    for v in factors.values():
        den = den * v
    return num * _inv(den)


def d4_contradiction_witness(q: Fraction, D: int) -> Tuple[Fraction, Fraction]:
    """(xi, (q^4 - 1)(q^14 - q^{4D})) for rational q with q^2 > 1, D >= 4.

    The second value is strictly negative whenever the preconditions
    hold, which forces xi^2 < 1; paired with xi being a nonzero integer
    for an actual graph, that is the impossibility at D >= 4."""
    q = Fraction(q)
    if D < 4:
        raise ValueError("the contradiction argument applies for D >= 4")
    if q * q <= 1:
        raise ValueError("requires q^2 > 1")
    xi = (q ** (2 * D) - q**9) / (q ** (2 * D + 2) - q**7)
    sign_value = (q**4 - 1) * (q**14 - q ** (4 * D))
    return xi, sign_value
