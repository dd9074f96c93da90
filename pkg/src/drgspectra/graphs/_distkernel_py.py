"""Pure-Python distance kernels: all-pairs BFS and the distance-regularity
profile scan.  Mirrors the compiled extension's API exactly."""

from __future__ import annotations

from array import array

BACKEND = "python"


def bfs_all(n, offsets, neighbors):
    """Flat n*n BFS distance matrix; -1 marks unreachable pairs."""
    dist = array("i", [-1] * (n * n))
    queue = array("i", [0] * n)
    for src in range(n):
        base = src * n
        dist[base + src] = 0
        queue[0] = src
        head, tail = 0, 1
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[base + u]
            for idx in range(offsets[u], offsets[u + 1]):
                v = neighbors[idx]
                if dist[base + v] < 0:
                    dist[base + v] = du + 1
                    queue[tail] = v
                    tail += 1
    return dist


def drg_profile(n, offsets, neighbors, dist, diameter):
    """Check that c_h, a_h, b_h are well defined over all ordered pairs.

    Returns (ok, c, a, b, witness) where c/a/b are lists indexed by
    distance (c[0] = 0, b[diameter] = 0 when ok) and witness is
    (x, y, kind) naming the first disagreeing pair, kind in "cab"."""
    c = [-1] * (diameter + 1)
    a = [-1] * (diameter + 1)
    b = [-1] * (diameter + 1)
    for x in range(n):
        base = x * n
        for y in range(n):
            h = dist[base + y]
            if h < 0:
                return (False, c, a, b, (x, y, "disconnected"))
            nc = na = nb = 0
            for idx in range(offsets[y], offsets[y + 1]):
                d = dist[base + neighbors[idx]]
                if d == h - 1:
                    nc += 1
                elif d == h:
                    na += 1
                else:
                    nb += 1
            if c[h] < 0:
                c[h], a[h], b[h] = nc, na, nb
            else:
                if nc != c[h]:
                    return (False, c, a, b, (x, y, "c"))
                if na != a[h]:
                    return (False, c, a, b, (x, y, "a"))
                if nb != b[h]:
                    return (False, c, a, b, (x, y, "b"))
    return (True, c, a, b, None)
