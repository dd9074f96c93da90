"""Exact adjacency spectra: division-free (Berkowitz) characteristic
polynomial over the integers, then Sturm root isolation; multiplicities
come from the square-free decomposition."""

from __future__ import annotations

from functools import cmp_to_key
from typing import List, Sequence, Tuple

from ..exactnum import AlgebraicReal, IntPolynomial, isolate_real_roots
from .graph import Graph

DEFAULT_SPECTRUM_CAP = 512


def charpoly(matrix: Sequence[Sequence[int]]) -> IntPolynomial:
    """Characteristic polynomial det(xI - M) of an integer matrix, by the
    Berkowitz algorithm (division-free, exact over Z).  Coefficients are
    returned lowest degree first."""
    n = len(matrix)
    if n == 0:
        return IntPolynomial((1,))
    M = [list(row) for row in matrix]
    vec = [1, -M[0][0]]  # charpoly of the 1x1 leading block, high first
    for k in range(1, n):
        row = M[k][:k]
        col = [M[i][k] for i in range(k)]
        block = [r[:k] for r in M[:k]]
        diag = M[k][k]
        # moments: diag, row*col, row*block*col, row*block^2*col, ...
        moments = [diag]
        v = col
        for i in range(k):
            moments.append(sum(row[j] * v[j] for j in range(k)))
            if i < k - 1:
                v = [sum(block[r][j] * v[j] for j in range(k)) for r in range(k)]
        toeplitz_col = [1] + [-m for m in moments]
        new = [0] * (k + 2)
        for i in range(k + 2):
            s = 0
            for j in range(max(0, i - k - 1), min(i, k) + 1):
                s += toeplitz_col[i - j] * vec[j]
            new[i] = s
        vec = new
    return IntPolynomial(tuple(reversed(vec)))


def adjacency_matrix(g: Graph) -> List[List[int]]:
    mat = [[0] * g.n for _ in range(g.n)]
    for u in range(g.n):
        for v in g.adjacency[u]:
            mat[u][v] = 1
    return mat


def graph_spectrum(
    g: Graph, cap: int = DEFAULT_SPECTRUM_CAP
) -> List[Tuple[AlgebraicReal, int]]:
    """Exact spectrum with multiplicities, sorted descending."""
    if g.n > cap:
        raise ValueError(f"graph has {g.n} > {cap} vertices (spectrum cap)")
    cp = charpoly(adjacency_matrix(g))
    out: List[Tuple[AlgebraicReal, int]] = []
    covered = 0
    for factor, mult in cp.squarefree_decomposition():
        roots = isolate_real_roots(factor)
        if len(roots) != factor.degree:
            raise ArithmeticError(
                "characteristic polynomial has non-real roots; adjacency "
                "matrix of a simple graph must be diagonalizable over R"
            )
        covered += mult * len(roots)
        out.extend((r, mult) for r in roots)
    if covered != g.n:
        raise ArithmeticError("eigenvalue multiplicities do not sum to n")
    out.sort(key=cmp_to_key(lambda a, b: a[0].compare(b[0])), reverse=True)
    return out
