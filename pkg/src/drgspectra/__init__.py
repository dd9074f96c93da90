"""drgspectra: exact-arithmetic tools for almost-bipartite Q-polynomial
distance-regular graphs."""

__version__ = "0.1.0"

from . import classify, exactnum, graphs, spectral  # noqa: E402,F401
