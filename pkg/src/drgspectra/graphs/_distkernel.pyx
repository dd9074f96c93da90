# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled distance kernels: all-pairs BFS and the distance-regularity
profile scan.  Same API as _distkernel_py."""

from array import array

from cpython.array cimport array as carray

BACKEND = "cython"


def bfs_all(int n, offsets_obj, neighbors_obj):
    cdef carray offsets = offsets_obj if isinstance(offsets_obj, array) else array("i", offsets_obj)
    cdef carray neighbors = neighbors_obj if isinstance(neighbors_obj, array) else array("i", neighbors_obj)
    cdef carray dist = array("i", [-1]) * (n * n)
    cdef carray queue = array("i", [0]) * n
    cdef int[:] off = offsets
    cdef int[:] nbr = neighbors
    cdef int[:] dv = dist
    cdef int[:] qv = queue
    cdef int src, base, head, tail, u, v, du, idx
    for src in range(n):
        base = src * n
        dv[base + src] = 0
        qv[0] = src
        head = 0
        tail = 1
        while head < tail:
            u = qv[head]
            head += 1
            du = dv[base + u]
            for idx in range(off[u], off[u + 1]):
                v = nbr[idx]
                if dv[base + v] < 0:
                    dv[base + v] = du + 1
                    qv[tail] = v
                    tail += 1
    return dist


def drg_profile(int n, offsets_obj, neighbors_obj, dist_obj, int diameter):
    cdef carray offsets = offsets_obj if isinstance(offsets_obj, array) else array("i", offsets_obj)
    cdef carray neighbors = neighbors_obj if isinstance(neighbors_obj, array) else array("i", neighbors_obj)
    cdef carray dist = dist_obj if isinstance(dist_obj, array) else array("i", dist_obj)
    cdef int[:] off = offsets
    cdef int[:] nbr = neighbors
    cdef int[:] dv = dist
    cdef carray c = array("i", [-1]) * (diameter + 1)
    cdef carray a = array("i", [-1]) * (diameter + 1)
    cdef carray b = array("i", [-1]) * (diameter + 1)
    cdef int[:] cv = c
    cdef int[:] av = a
    cdef int[:] bv = b
    cdef int x, y, h, nc, na, nb, idx, d, base
    for x in range(n):
        base = x * n
        for y in range(n):
            h = dv[base + y]
            if h < 0:
                return (False, list(c), list(a), list(b), (x, y, "disconnected"))
            nc = 0
            na = 0
            nb = 0
            for idx in range(off[y], off[y + 1]):
                d = dv[base + nbr[idx]]
                if d == h - 1:
                    nc += 1
                elif d == h:
                    na += 1
                else:
                    nb += 1
            if cv[h] < 0:
                cv[h] = nc
                av[h] = na
                bv[h] = nb
            else:
                if nc != cv[h]:
                    return (False, list(c), list(a), list(b), (x, y, "c"))
                if na != av[h]:
                    return (False, list(c), list(a), list(b), (x, y, "a"))
                if nb != bv[h]:
                    return (False, list(c), list(a), list(b), (x, y, "b"))
    return (True, list(c), list(a), list(b), None)
