"""Exact eigensystem of an intersection array: eigenvalues, eigenmatrices
P and Q, multiplicities and the Krein tensor.

Scalars live in Q when the spectrum is rational, otherwise in a single
real number field containing every eigenvalue (built incrementally by
the exactnum splitting-field machinery, with all subsequent arithmetic
done by the exactnum kernel)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from ..exactnum import (
    AlgebraicReal,
    FieldElement,
    IntPolynomial,
    NumberField,
    isolate_real_roots,
)
from ..exactnum.numberfield import batch_inverse
from ..exactnum.splitting import splitting_field
from .arrays import IntersectionArray

Scalar = Union[Fraction, FieldElement]


class RepeatedEigenvalueError(ArithmeticError):
    """The tridiagonal intersection matrix has a repeated eigenvalue."""


def standard_polynomials(arr: IntersectionArray) -> List[List[Fraction]]:
    """p_0, ..., p_D with P_ij = p_j(theta_i), plus the characteristic
    polynomial of the intersection matrix as the last entry (index D+1).
    Coefficient lists are lowest degree first, exact rationals."""
    D = arr.D
    a = arr.a
    polys: List[List[Fraction]] = [[Fraction(1)], [Fraction(0), Fraction(1)]]
    for j in range(1, D + 1):
        cj1 = Fraction(arr.c_at(j + 1)) if j < D else Fraction(1)
        prev, cur = polys[j - 1], polys[j]
        shifted = [Fraction(0)] + cur  # x * p_j
        nxt = [Fraction(0)] * (len(shifted))
        for i, v in enumerate(shifted):
            nxt[i] += v
        for i, v in enumerate(cur):
            nxt[i] -= a[j] * v
        for i, v in enumerate(prev):
            nxt[i] -= arr.b_at(j - 1) * v
        polys.append([v / cj1 for v in nxt])
    return polys


def _horner(coeffs: Sequence[Fraction], x: Scalar) -> Scalar:
    acc: Scalar = Fraction(0)
    for c in reversed(list(coeffs)):
        acc = acc * x + c
    return acc


@dataclass
class SpectralData:
    """Exact spectral package of an intersection array."""

    arr: IntersectionArray
    eigenvalues: List[AlgebraicReal]  # descending
    thetas: List[Scalar]  # same order, exact scalars
    mults: List[Scalar]
    P: List[List[Scalar]]
    Q: List[List[Scalar]]
    krein: List[List[List[Scalar]]]
    field: Optional[NumberField]

    @property
    def n(self) -> Fraction:
        return self.arr.n

    def scalar_is_zero(self, x: Scalar) -> bool:
        return x == 0 if isinstance(x, Fraction) else x.is_zero()

    def mult_fractions(self) -> List[Optional[Fraction]]:
        return [m if isinstance(m, Fraction) else m.as_fraction() for m in self.mults]

    def mults_are_positive_integers(self) -> bool:
        for m in self.mult_fractions():
            if m is None or m.denominator != 1 or m <= 0:
                return False
        return True

    def krein_nonnegative(self) -> bool:
        D = self.arr.D
        for h in range(D + 1):
            for i in range(D + 1):
                for j in range(i, D + 1):
                    v = self.krein[h][i][j]
                    if isinstance(v, Fraction):
                        if v < 0:
                            return False
                    elif v.sign() < 0:
                        return False
        return True


def charpoly_of_array(arr: IntersectionArray) -> IntPolynomial:
    coeffs = standard_polynomials(arr)[arr.D + 1]
    return IntPolynomial.from_fractions(coeffs)


def _build_field(
    eigs: List[AlgebraicReal], phi: IntPolynomial
) -> Tuple[NumberField, List[FieldElement]]:
    """One real number field containing every eigenvalue, with each
    eigenvalue expressed in it (embedding verified exactly)."""
    irr = [e for e in eigs if e.as_rational() is None]
    field, reps = splitting_field(irr)
    thetas: List[FieldElement] = []
    rep_iter = iter(reps)
    for e in eigs:
        r = e.as_rational()
        if r is not None:
            thetas.append(field.from_rational(r))
            continue
        el = next(rep_iter)
        _verify_embedding(el, e)
        thetas.append(el)
    return field, thetas


def _verify_embedding(el: FieldElement, target: AlgebraicReal) -> None:
    """el must be the root of target.defining inside target's interval."""
    val = _horner([Fraction(c) for c in target.defining.coeffs], el)
    if not val.is_zero():
        raise ArithmeticError("field representation is not a conjugate root")
    lo, hi = target.interval
    if (el - lo).sign() <= 0 or (el - hi).sign() >= 0:
        raise ArithmeticError("field representation picks the wrong conjugate")


def spectrum(arr: IntersectionArray) -> SpectralData:
    """Exact eigensystem of the (D+1)x(D+1) tridiagonal intersection
    matrix: eigenvalues, P and Q (P.Q = n.I), multiplicities, Krein
    tensor."""
    if any(b < 1 for b in arr.b) or any(c < 1 for c in arr.c):
        raise ValueError("spectrum needs b_i >= 1 and c_i >= 1")
    D = arr.D
    polys = standard_polynomials(arr)
    phi = IntPolynomial.from_fractions(polys[D + 1])
    if phi.gcd(phi.derivative()).degree > 0:
        raise RepeatedEigenvalueError(f"array {arr} has a repeated eigenvalue")
    eigs = isolate_real_roots(phi)
    if len(eigs) != D + 1:
        raise RepeatedEigenvalueError(
            f"array {arr}: expected {D + 1} distinct real eigenvalues, "
            f"found {len(eigs)}"
        )
    eigs = list(reversed(eigs))  # descending
    if eigs[0].as_rational() != arr.k:
        raise ArithmeticError("largest eigenvalue must equal the valency k")

    field: Optional[NumberField] = None
    thetas: List[Scalar]
    if all(e.as_rational() is not None for e in eigs):
        thetas = [e.as_rational() for e in eigs]
    else:
        field, thetas = _build_field(eigs, phi)

    k_sizes = arr.k_sizes
    n = arr.n
    P = [[_horner(polys[j], th) for j in range(D + 1)] for th in thetas]
    sums: List[Scalar] = []
    for i in range(D + 1):
        s: Scalar = Fraction(0)
        for j in range(D + 1):
            s = s + P[i][j] * P[i][j] * (1 / Fraction(k_sizes[j]))
        sums.append(s)
    mults: List[Scalar] = [n * si for si in batch_inverse(sums)]
    Q = [
        [mults[j] * P[j][i] * (1 / Fraction(k_sizes[i])) for j in range(D + 1)]
        for i in range(D + 1)
    ]
    _check_pq_identity(P, Q, n)
    krein = _krein_tensor(P, Q, n)
    return SpectralData(arr, eigs, thetas, mults, P, Q, krein, field)


def _check_pq_identity(P, Q, n) -> None:
    D1 = len(P)
    for i in range(D1):
        for j in range(D1):
            s = Fraction(0)
            for l in range(D1):
                s = s + P[i][l] * Q[l][j]
            expect = n if i == j else 0
            ok = (s == expect) if isinstance(s, Fraction) else (s - expect).is_zero()
            if not ok:
                raise ArithmeticError("eigenmatrix identity P.Q = n.I failed")


def _krein_tensor(P, Q, n) -> List[List[List[Scalar]]]:
    """q^h_ij from Q_li Q_lj = sum_h q^h_ij Q_lh, resolved through P."""
    D1 = len(P)
    inv_n = 1 / Fraction(n)
    out = [[[None] * D1 for _ in range(D1)] for _ in range(D1)]
    for i in range(D1):
        for j in range(i, D1):
            col = [Q[l][i] * Q[l][j] for l in range(D1)]
            for h in range(D1):
                s = Fraction(0)
                for l in range(D1):
                    s = s + P[h][l] * col[l]
                v = s * inv_n
                out[h][i][j] = v
                out[h][j][i] = v
    return out
