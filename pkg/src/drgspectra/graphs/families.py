"""Constructions: cycles, hypercubes, folded cubes, Odd graphs, the
bipartite double, and the distance-2 local graph."""

from __future__ import annotations

from itertools import combinations
from typing import List, Tuple

from .distance import distance_data
from .graph import Graph

FAMILIES = ("cycle", "hypercube", "folded_cube", "odd")


def construct_family(family: str, n: int) -> Graph:
    """Build a named family member.

    cycle: n-gon (n >= 3).
    hypercube: n-dimensional cube on bit-strings (n >= 1).
    folded_cube: folded n-cube, n odd >= 5; vertices are length-n
        bit-strings modulo complementation, adjacent at Hamming distance
        1 or n-1.
    odd: Odd graph on an n-set, n odd >= 5; vertices are the
        (n-1)/2-subsets, adjacent when disjoint.
    """
    if family == "cycle":
        if n < 3:
            raise ValueError(f"cycle needs n >= 3, got {n}")
        edges = [(i, (i + 1) % n) for i in range(n)]
        return Graph.from_edges(n, edges, [str(i) for i in range(n)])
    if family == "hypercube":
        if n < 1:
            raise ValueError(f"hypercube needs dimension >= 1, got {n}")
        size = 1 << n
        edges = [(v, v ^ (1 << i)) for v in range(size) for i in range(n) if v < v ^ (1 << i)]
        labels = [format(v, f"0{n}b") for v in range(size)]
        return Graph.from_edges(size, edges, labels)
    if family == "folded_cube":
        if n < 5 or n % 2 == 0:
            raise ValueError(f"folded_cube needs odd n >= 5, got {n}")
        mask = (1 << n) - 1
        reps = [v for v in range(1 << n) if v <= (v ^ mask)]
        index = {v: i for i, v in enumerate(reps)}
        edges = set()
        for v in reps:
            for i in range(n):
                w = v ^ (1 << i)
                wi = index[min(w, w ^ mask)]
                if index[v] != wi:
                    edges.add((min(index[v], wi), max(index[v], wi)))
        labels = [format(v, f"0{n}b") for v in reps]
        return Graph.from_edges(len(reps), sorted(edges), labels)
    if family == "odd":
        if n < 5 or n % 2 == 0:
            raise ValueError(f"odd graph needs odd n >= 5, got {n}")
        half = (n - 1) // 2
        sets = list(combinations(range(n), half))
        edges = [
            (i, j)
            for i, si in enumerate(sets)
            for j, sj in enumerate(sets)
            if i < j and not set(si) & set(sj)
        ]
        labels = ["{" + ",".join(map(str, s)) + "}" for s in sets]
        return Graph.from_edges(len(sets), edges, labels)
    raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")


def bipartite_double(g: Graph) -> Graph:
    """Double cover on signed copies: x^+ ~ y^- exactly when x ~ y."""
    if not g.is_connected():
        raise ValueError("bipartite double requires a connected graph")
    n = g.n
    edges: List[Tuple[int, int]] = []
    for u in range(n):
        for v in g.adjacency[u]:
            edges.append((u, n + v))
    base = g.labels if g.labels is not None else tuple(str(i) for i in range(n))
    labels = [f"{x}+" for x in base] + [f"{x}-" for x in base]
    return Graph.from_edges(2 * n, edges, labels)


def local_graph_g22(g: Graph, x: int = 0) -> Graph:
    """Graph on the distance-2 sphere of x, adjacent when at mutual
    distance 2 in g.  May be disconnected."""
    dd = distance_data(g)
    if dd.diameter < 2:
        raise ValueError("local graph needs diameter >= 2")
    sphere = [y for y in range(g.n) if dd.d(x, y) == 2]
    edges = [
        (i, j)
        for i, yi in enumerate(sphere)
        for j, yj in enumerate(sphere)
        if i < j and dd.d(yi, yj) == 2
    ]
    base = g.labels if g.labels is not None else tuple(str(i) for i in range(g.n))
    return Graph.from_edges(len(sphere), edges, [base[y] for y in sphere])
