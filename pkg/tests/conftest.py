"""Shared helpers for the test suite."""

import random

from drgspectra.spectral import IntersectionArray


def random_feasible_arrays(count, seed, dmax=4, kmax=8):
    """Deterministic sample of structurally plausible intersection arrays
    with 2 <= D <= dmax: b non-increasing, c non-decreasing, c_1 = 1,
    entries in [1, kmax]."""
    rng = random.Random(seed)
    out = []
    seen = set()
    while len(out) < count:
        D = rng.randint(2, dmax)
        k = rng.randint(2, kmax)
        b = [k]
        for _ in range(D - 1):
            b.append(rng.randint(1, b[-1]))
        c = [1]
        ok = True
        for i in range(2, D + 1):
            # keep a_i = k - b_i - c_i nonnegative (b_D = 0)
            hi = k - (b[i] if i < D else 0)
            if hi < c[-1]:
                ok = False
                break
            c.append(rng.randint(c[-1], hi))
        if not ok:
            continue
        arr = IntersectionArray(tuple(b), tuple(c))
        if arr in seen:
            continue
        seen.add(arr)
        out.append(arr)
    return out
