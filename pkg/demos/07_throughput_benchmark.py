#!/usr/bin/env python3
# Throughput of the exact orbit loop.
#
# The hot path is one matrix-vector product mod 2^61-1 per step per path
# (d^2 limb-split multiplications on uint64) plus the trigonometric
# evaluation of the observable. This measures steps/second across path
# counts, and the price of extra observable modes.

import time

import numpy as np

from toruslab import AutoMatrix, FourierFunction, cosine_pair, sample_paths

S = AutoMatrix.cat_map()
N = 2048

print(f"{'paths':>8s} {'modes':>6s} {'seconds':>8s} {'path-steps/s':>14s}")
for M in (1000, 4000, 16000):
    for label, f in [
        ("1", cosine_pair(2, (1, 0))),
        ("4", FourierFunction(2, {(1, 0): 1.0, (-1, 0): 1.0,
                                  (2, 1): 0.5, (-2, -1): 0.5,
                                  (0, 1): 0.25, (0, -1): 0.25,
                                  (3, 2): 1.0j, (-3, -2): -1.0j})),
    ]:
        t0 = time.perf_counter()
        sample_paths(S, f, M=M, N=N, seed=1, budget_mb=2048)
        dt = time.perf_counter() - t0
        print(f"{M:8d} {label:>6s} {dt:8.2f} {M * N / dt:14.3e}")

# big-integer reference for one path, for the honesty of it
from toruslab.orbits import MERSENNE61, orbit_bigint

t0 = time.perf_counter()
orbit_bigint(S, (12345, 67890), MERSENNE61, 50_000)
dt = time.perf_counter() - t0
print(f"\nnaive big-int oracle: {50_000 / dt:.3e} steps/s (single path)")
