#!/usr/bin/env python3
# Desk-scale check of the invariance principle for the cat map.
#
# Orbits are iterated exactly on the rational grid (1/Q)Z^2 with
# Q = 2^61 - 1 (a float orbit of a hyperbolic map is garbage after ~50
# steps). The partial-sum paths are then tested against the Brownian
# limits with the EXACT long-run variance from the correlation engine --
# no variance estimation anywhere.

from toruslab import AutoMatrix, cosine_pair, sample_paths, variance_series
from toruslab.orbits import birkhoff_check, gaussian_ensemble
from toruslab.stats import (clt_test, donsker_functionals, lil_envelope,
                            variance_growth)

S = AutoMatrix.cat_map()
f = cosine_pair(2, (1, 0))

sigma2 = variance_series(f, S).sigma2
print("exact sigma^2 =", sigma2)

print("sampling 4000 exact orbits of length 2^14 ...")
ens = sample_paths(S, f, M=4000, N=2 ** 14, seed=20250810)

bk = birkhoff_check(ens, sigma2=sigma2)
print(f"birkhoff: max |S_N/N| = {bk.max_abs_mean:.4f} "
      f"(threshold {bk.threshold:.4f}) -> {bk.verdict}")

n = 2 ** 12
rep = clt_test(ens, sigma2, n)
print(f"CLT at n=2^12:      D = {rep.statistic:.4f}  p = {rep.p_value:.3f}  "
      f"-> {rep.verdict}")
wrong = clt_test(ens, sigma2 / 2, n)
print(f"  (control with sigma2/2: p = {wrong.p_value:.2e} -> {wrong.verdict})")

for r in donsker_functionals(ens, sigma2, n):
    print(f"{r.name:18s} D = {r.statistic:.4f}  p = {r.p_value:.3f}  "
          f"-> {r.verdict}")

lil = lil_envelope(ens, sigma2)
print(f"LIL envelope:       q99 = {lil.statistic:.3f}  "
      f"(pass band up to {lil.threshold}) -> {lil.verdict}")

# the same functional on iid Gaussian synthetics, the calibration oracle
g = gaussian_ensemble(1000, 2 ** 14, sigma2, seed=99)
print(f"  (iid Gaussian reference: q99 = {lil_envelope(g, sigma2).statistic:.3f})")

vg = variance_growth(ens, variance_series(f, S), ns=[2 ** 6, 2 ** 10, 2 ** 12])
print(f"variance growth:    worst z = {vg.statistic:.2f} -> {vg.verdict}")
