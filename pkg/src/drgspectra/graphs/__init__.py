"""Graph constructions, BFS distance data, distance-regularity checks and
exact adjacency spectra."""

from .graph import Graph
from .families import FAMILIES, bipartite_double, construct_family, local_graph_g22
from .distance import (
    KERNEL_BACKEND,
    DistanceData,
    NotDistanceRegular,
    distance_data,
    intersection_array,
)
from .spectrum import adjacency_matrix, charpoly, graph_spectrum

__all__ = [
    "Graph",
    "FAMILIES",
    "construct_family",
    "bipartite_double",
    "local_graph_g22",
    "KERNEL_BACKEND",
    "DistanceData",
    "NotDistanceRegular",
    "distance_data",
    "intersection_array",
    "adjacency_matrix",
    "charpoly",
    "graph_spectrum",
]
