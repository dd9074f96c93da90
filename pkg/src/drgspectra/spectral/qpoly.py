"""Q-polynomial ordering detection.

Every ordering of the nontrivial eigenvalues is tried (theta_0 = k stays
first).  Each candidate is judged twice, by independent criteria:

  (a) definition check: interpolating column pi(j) of the reordered dual
      eigenmatrix on the sigma-points must give a polynomial of degree
      exactly j, for every j;
  (b) Krein criterion: the slice q^{pi(1)} of the Krein tensor must be
      irreducible tridiagonal under the reordering.

The two verdicts must agree; a mismatch is an internal error, never
swallowed."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Dict, List, Optional, Tuple

from ..exactnum import AlgebraicReal
from ..exactnum.numberfield import batch_inverse
from .arrays import IntersectionArray
from .eigensystem import Scalar, SpectralData, spectrum


class CriterionDisagreement(AssertionError):
    """Definition-based and Krein-based checks disagreed (a bug)."""


@dataclass
class QPolyOrdering:
    """A Q-polynomial eigenvalue ordering with its witnesses."""

    permutation: Tuple[int, ...]  # indices into the descending eigenvalue list
    eigenvalues: List[AlgebraicReal]
    sigma: List[Scalar]  # dual eigenvalue sequence
    witness_polys: List[List[Scalar]]  # q_j coefficients, lowest degree first
    mults_integral: bool

    def witness_degrees(self) -> List[int]:
        return [len(p) - 1 for p in self.witness_polys]


def _is_zero(x: Scalar) -> bool:
    return x == 0 if isinstance(x, Fraction) else x.is_zero()


def is_almost_bipartite(arr: IntersectionArray) -> bool:
    """a_i = 0 for i < D and a_D != 0."""
    return arr.is_almost_bipartite()


def q_polynomial_orderings(
    arr: IntersectionArray, data: Optional[SpectralData] = None
) -> List[QPolyOrdering]:
    """All Q-polynomial orderings of the eigenvalues of arr, in
    lexicographic order of the index permutation."""
    sd = data if data is not None else spectrum(arr)
    D = sd.arr.D
    Q = sd.Q
    n1 = D + 1
    mults_integral = sd.mults_are_positive_integers()

    # per candidate second idempotent e: sigma distinctness and the exact
    # interpolation degree of every dual-eigenmatrix column on the sigma
    # nodes.  The degrees are computed division-free (scaled divided
    # differences), so this costs no field inversions and is shared by
    # every ordering with the same e.
    sigma_cache: Dict[int, Optional[Tuple[List[Scalar], List[int]]]] = {}
    # pairwise-difference inverses, built lazily (only for orderings that
    # pass and need their witness polynomials expanded)
    inv_cache: Dict[int, Dict[Tuple[int, int], Scalar]] = {}

    def sigma_data(e: int):
        if e in sigma_cache:
            return sigma_cache[e]
        sig = [Q[i][e] for i in range(n1)]
        for i in range(n1):
            for j in range(i + 1, n1):
                if _is_zero(sig[j] - sig[i]):
                    sigma_cache[e] = None
                    return None
        degs = _column_degrees(sig, Q, n1)
        sigma_cache[e] = (sig, degs)
        return sigma_cache[e]

    def sigma_inverses(e: int) -> Dict[Tuple[int, int], Scalar]:
        if e not in inv_cache:
            sig, _ = sigma_cache[e]
            pairs = [(j, i) for i in range(n1) for j in range(i + 1, n1)]
            diffs = [sig[j] - sig[i] for j, i in pairs]
            inv_cache[e] = dict(zip(pairs, batch_inverse(diffs)))
        return inv_cache[e]

    results: List[QPolyOrdering] = []
    for tail in permutations(range(1, D + 1)):
        perm = (0,) + tail
        e = perm[1]

        # -- Krein criterion ------------------------------------------
        slice_e = sd.krein[e]
        krein_ok = True
        for i in range(D + 1):
            if not krein_ok:
                break
            for j in range(i + 2, D + 1):
                if not _is_zero(slice_e[perm[i]][perm[j]]):
                    krein_ok = False
                    break
        if krein_ok:
            for i in range(D):
                if _is_zero(slice_e[perm[i]][perm[i + 1]]):
                    krein_ok = False
                    break

        # -- definition check -------------------------------------------
        sdat = sigma_data(e)
        if sdat is None:
            definition_ok = False
        else:
            sig, degs = sdat
            definition_ok = all(degs[perm[j]] == j for j in range(D + 1))

        if krein_ok != definition_ok:
            raise CriterionDisagreement(
                f"array {arr}, ordering {perm}: Krein criterion says "
                f"{krein_ok}, definition check says {definition_ok}"
            )
        if krein_ok:
            sig, _ = sdat
            inv = sigma_inverses(e)
            witness = []
            for j in range(D + 1):
                coeffs = _newton_degree_exact(
                    sig, inv, [Q[i][perm[j]] for i in range(n1)], j
                )
                assert coeffs is not None, "witness degree mismatch (bug)"
                witness.append(coeffs)
            results.append(
                QPolyOrdering(
                    permutation=perm,
                    eigenvalues=[sd.eigenvalues[p] for p in perm],
                    sigma=list(sig),
                    witness_polys=witness,
                    mults_integral=mults_integral,
                )
            )
    return results


def _column_degrees(sig: List[Scalar], Q, n1: int) -> List[int]:
    """Exact interpolation degree of each column of Q on the nodes sig,
    by scaled divided differences: U_m(i) is the order-m divided
    difference over sig[i..i+m] times the (nonzero) Vandermonde product
    of the window, satisfying the division-free recurrence

        U_m(i) = U_{m-1}(i+1) * prod_{b=i+1}^{i+m-1} (sig[b] - sig[i])
               - U_{m-1}(i)   * prod_{a=i+1}^{i+m-1} (sig[i+m] - sig[a])

    so U_m(0) vanishes exactly when the true Newton coefficient does."""
    p1 = [None] * n1  # p1[m][i], p2[m][i] as above
    p2 = [None] * n1
    for m in range(1, n1):
        row1, row2 = [], []
        for i in range(n1 - m):
            a1 = Fraction(1)
            a2 = Fraction(1)
            for t in range(i + 1, i + m):
                a1 = a1 * (sig[t] - sig[i])
                a2 = a2 * (sig[i + m] - sig[t])
            row1.append(a1)
            row2.append(a2)
        p1[m], p2[m] = row1, row2
    degs = []
    for col in range(n1):
        u = [Q[i][col] for i in range(n1)]
        tops = [u[0]]
        for m in range(1, n1):
            u = [
                u[i + 1] * p1[m][i] - u[i] * p2[m][i]
                for i in range(n1 - m)
            ]
            tops.append(u[0])
        deg = -1
        for m in range(n1 - 1, -1, -1):
            if not _is_zero(tops[m]):
                deg = m
                break
        degs.append(deg)
    return degs


def _newton_degree_exact(sig, inv, values, j) -> Optional[List[Scalar]]:
    """Interpolate values on the nodes sig; return power-basis
    coefficients when the interpolant has degree exactly j, else None."""
    n = len(sig)
    # divided difference table, level by level
    table = list(values)
    newton = [table[0]]
    for level in range(1, n):
        table = [
            (table[i + 1] - table[i]) * inv[(i + level, i)] for i in range(n - level)
        ]
        newton.append(table[0])
    deg = -1
    for m in range(n - 1, -1, -1):
        if not _is_zero(newton[m]):
            deg = m
            break
    if deg != j:
        return None
    # expand Newton form to power basis up to degree j
    coeffs: List[Scalar] = [Fraction(0)] * (j + 1)
    basis: List[Scalar] = [Fraction(1)]  # prod_{t<m} (x - sig[t])
    for m in range(j + 1):
        for t, b in enumerate(basis):
            coeffs[t] = coeffs[t] + newton[m] * b
        new_basis: List[Scalar] = [Fraction(0)] * (len(basis) + 1)
        for t, b in enumerate(basis):
            new_basis[t] = new_basis[t] - sig[m] * b
            new_basis[t + 1] = new_basis[t + 1] + b
        basis = new_basis
    return coeffs
