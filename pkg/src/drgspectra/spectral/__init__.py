"""Exact spectral analysis of intersection arrays: eigenvalues,
eigenmatrices, multiplicities, Krein parameters and Q-polynomial
ordering detection."""

from .arrays import IntersectionArray
from .eigensystem import (
    RepeatedEigenvalueError,
    Scalar,
    SpectralData,
    charpoly_of_array,
    spectrum,
    standard_polynomials,
)
from .qpoly import (
    CriterionDisagreement,
    QPolyOrdering,
    is_almost_bipartite,
    q_polynomial_orderings,
)

__all__ = [
    "IntersectionArray",
    "RepeatedEigenvalueError",
    "Scalar",
    "SpectralData",
    "charpoly_of_array",
    "spectrum",
    "standard_polynomials",
    "CriterionDisagreement",
    "QPolyOrdering",
    "is_almost_bipartite",
    "q_polynomial_orderings",
]
