#!/usr/bin/env python3
"""Compare the compiled distance kernel with the pure-Python fallback.

Each workload is run in a fresh subprocess so the kernel choice (made at
import time, controlled by DRG_SPECTRA_PURE_PYTHON) is clean, and the
results are cross-checked between backends before timings are reported.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOADS = [
    ("hypercube", 9),
    ("folded_cube", 9),
    ("odd", 11),
    ("cycle", 512),
]

CHILD = r"""
import json, sys, time
from drgspectra.graphs import construct_family, intersection_array
from drgspectra.graphs.distance import KERNEL_BACKEND

family, n, repeat = sys.argv[1], int(sys.argv[2]), int(sys.argv[3])
g = construct_family(family, n)
best = None
for _ in range(repeat):
    t0 = time.perf_counter()
    arr = intersection_array(g)
    dt = time.perf_counter() - t0
    best = dt if best is None else min(best, dt)
print(json.dumps({
    "backend": KERNEL_BACKEND,
    "vertices": g.n,
    "seconds": best,
    "array": str(arr),
}))
"""


def run_child(family, n, repeat, pure):
    env = dict(os.environ, DRG_SPECTRA_PURE_PYTHON="1" if pure else "0")
    r = subprocess.run(
        [sys.executable, "-c", CHILD, family, str(n), str(repeat)],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    return json.loads(r.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3, help="best-of-N timing")
    args = ap.parse_args()

    print(f"{'workload':<22} {'n':>6} {'compiled':>10} {'python':>10} {'speedup':>8}")
    for family, n in WORKLOADS:
        fast = run_child(family, n, args.repeat, pure=False)
        slow = run_child(family, n, args.repeat, pure=True)
        if fast["array"] != slow["array"]:
            raise SystemExit(
                f"backend mismatch on {family}-{n}: "
                f"{fast['array']} vs {slow['array']}"
            )
        if fast["backend"] == slow["backend"]:
            print(f"(compiled kernel unavailable; both runs used "
                  f"{fast['backend']})")
        ratio = slow["seconds"] / fast["seconds"]
        name = f"{family}-{n}"
        print(
            f"{name:<22} {fast['vertices']:>6} "
            f"{fast['seconds']:>9.4f}s {slow['seconds']:>9.4f}s {ratio:>7.1f}x"
        )


if __name__ == "__main__":
    main()
