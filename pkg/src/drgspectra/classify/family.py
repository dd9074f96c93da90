"""The D = 3 two-parameter family, closed-form arrays of the known
families, and the classifier that sorts an intersection array into one of
the possible cases."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from ..exactnum import AlgebraicReal, FieldElement, NumberField
from ..spectral.arrays import IntersectionArray
from ..spectral.eigensystem import SpectralData, spectrum
from ..spectral.qpoly import QPolyOrdering, q_polynomial_orderings
from .params import Scalar, _as_fraction, _frac, _inv, _is_zero, beta_of

BetaLike = Union[int, Fraction, AlgebraicReal, FieldElement]


@dataclass
class D3FamilyPoint:
    """A (beta, mu) point of the diameter-3 family with its derived array
    data and eigenvalues.

    k = 1 + (beta^2-1)(beta(beta+2) - (beta+1) mu)
    c2 = mu
    c3 = -(beta+1)(beta^2+beta-1 - (beta+1) mu)
    theta0 = k
    theta1 = (beta+1)(beta^2+beta-1 - beta mu)
    theta2 = beta^2 + beta - 1 - (beta+1) mu
    theta3 = 1 - beta - beta^2
    """

    beta: Scalar
    mu: int
    k: Scalar
    c2: Scalar
    c3: Scalar
    thetas: Tuple[Scalar, Scalar, Scalar, Scalar]

    def b2(self) -> Scalar:
        return self.k - self.mu

    def array(self) -> IntersectionArray:
        """The intersection array {k, k-1, k-mu; 1, mu, c3}; requires every
        entry to be a positive integer."""
        vals = [self.k, self.k - 1, self.k - self.mu, self.c3]
        ints = []
        for v in vals:
            f = _as_fraction(v)
            if f is None or f.denominator != 1 or f <= 0:
                raise ValueError(
                    f"family point (beta={self.beta}, mu={self.mu}) has a "
                    f"non-positive-integer array entry {v}"
                )
            ints.append(int(f))
        return IntersectionArray(
            (ints[0], ints[1], ints[2]), (1, self.mu, ints[3])
        )


def d3_family(beta: BetaLike, mu: int) -> D3FamilyPoint:
    """Evaluate the diameter-3 family at (beta, mu) exactly.

    beta may be an integer, rational, AlgebraicReal, or number-field
    element.  Infeasible outputs (negative k, fractional c3, ...) are
    returned as-is; feasibility is the caller's concern."""
    if mu < 1:
        raise ValueError("mu must be a positive integer")
    b: Scalar
    if isinstance(beta, AlgebraicReal):
        r = beta.as_rational()
        b = r if r is not None else NumberField.from_algebraic(beta).gen()
    else:
        b = _frac(beta)
    e = b * b + b - 1  # beta^2 + beta - 1, shared subexpression
    k = 1 + (b * b - 1) * (b * (b + 2) - (b + 1) * mu)
    c3 = -(b + 1) * (e - (b + 1) * mu)
    t0 = k
    t1 = (b + 1) * (e - b * mu)
    t2 = e - (b + 1) * mu
    t3 = 1 - b - b * b
    # cross-check: b2 = k - mu must factor as (beta^2+beta-1)(beta^2+beta-1-beta*mu)
    if not _is_zero((k - mu) - e * (e - b * mu)):
        raise AssertionError("b2 closed-form cross-check failed")
    return D3FamilyPoint(
        beta=b, mu=mu, k=k, c2=_frac(mu), c3=c3, thetas=(t0, t1, t2, t3)
    )


_KNOWN = ("Cycle", "FoldedCube", "OddGraph")


def known_family_array(family: str, D: int) -> IntersectionArray:
    """Closed-form intersection array of the (2D+1)-gon, folded
    (2D+1)-cube, or Odd graph on a (2D+1)-set."""
    if D < 1:
        raise ValueError("D must be positive")
    if family == "Cycle":
        c = [1] * D
        k = 2
    elif family == "FoldedCube":
        c = list(range(1, D + 1))
        k = 2 * D + 1
    elif family == "OddGraph":
        c = [(i + 1) // 2 for i in range(1, D + 1)]
        k = D + 1
    else:
        raise ValueError(f"unknown family {family!r}")
    b = tuple(k - ci for ci in [0] + c[:-1])
    return IntersectionArray(b, tuple(c))


@dataclass
class Classification:
    """Classifier verdict plus the evidence it rests on."""

    verdict: str  # Cycle | FoldedCube | OddGraph | D3Family |
    #               NotQPolynomial | NotAlmostBipartite | TheoremContradiction
    D: int
    beta: Optional[Scalar] = None
    mu: Optional[int] = None
    orderings: List[QPolyOrdering] = field(default_factory=list)
    betas: List[Scalar] = field(default_factory=list)  # one per ordering
    spectral: Optional[SpectralData] = None

    def describe(self) -> str:
        if self.verdict == "D3Family":
            return f"D3Family({self.beta},{self.mu})"
        if self.verdict in _KNOWN:
            return f"{self.verdict}({self.D})"
        return self.verdict


def classify(arr: IntersectionArray) -> Classification:
    """Sort an intersection array with D >= 3 into: not almost-bipartite,
    not Q-polynomial, one of the three known families, the diameter-3
    two-parameter family, or a contradiction (believed unreachable; an
    actual instance would be a genuine discovery, so it is reported
    rather than raised)."""
    D = arr.D
    if D < 3:
        raise ValueError("classification needs D >= 3")
    if not arr.is_almost_bipartite():
        return Classification(verdict="NotAlmostBipartite", D=D)
    sd = spectrum(arr)
    orderings = q_polynomial_orderings(arr, sd)
    if not orderings:
        return Classification(verdict="NotQPolynomial", D=D, spectral=sd)
    betas = [
        beta_of(*(sd.thetas[o.permutation[i]] for i in range(4)))
        for o in orderings
    ]
    base = dict(D=D, orderings=orderings, betas=betas, spectral=sd)
    for fam in _KNOWN:
        if arr == known_family_array(fam, D):
            return Classification(verdict=fam, **base)
    if D == 3:
        mu = arr.c[1]
        for o, b in zip(orderings, betas):
            point = d3_family_matches(arr, b, mu)
            if point is not None:
                return Classification(
                    verdict="D3Family", beta=b, mu=mu, **base
                )
    return Classification(verdict="TheoremContradiction", **base)


def d3_family_matches(
    arr: IntersectionArray, beta: Scalar, mu: int
) -> Optional[D3FamilyPoint]:
    """The family point at (beta, mu) when it reproduces arr exactly,
    else None."""
    if arr.D != 3 or mu < 1:
        return None
    p = d3_family(beta, mu)
    checks = (
        (p.k, arr.k),
        (p.c2, arr.c[1]),
        (p.c3, arr.c[2]),
        (p.b2(), arr.b[2]),
    )
    for got, want in checks:
        if not _is_zero(got - want):
            return None
    return p
