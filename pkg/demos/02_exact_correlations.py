#!/usr/bin/env python3
# Exact long-run variance via the dual lattice action.
#
# Composing an observable with the torus map permutes its frequencies by
# S^T, so every correlation E(f . f o T^n) is a finite overlap sum of
# integer lattice points -- exactly zero once the dual orbit leaves the
# support, and the engine certifies when that happens for good.

from toruslab import AutoMatrix, FourierFunction, cosine_pair, variance_series

S = AutoMatrix.cat_map()

# one cosine pair: the dual orbit of (1,0) never returns, so every
# off-zero correlation vanishes and sigma^2 = E(f^2) = 2 exactly
f1 = cosine_pair(2, (1, 0))
rep = variance_series(f1, S)
print("single cosine:", "sigma2 =", rep.sigma2,
      "termination_n0 =", rep.termination_n0)

# three modes along one dual orbit: (1,0) -> (2,1) -> (5,3) under S^T,
# so lags 1 and 2 correlate and the variance profile creeps up to 18
coeffs = {}
for k in [(1, 0), (2, 1), (5, 3)]:
    coeffs[k] = 1.0
    coeffs[(-k[0], -k[1])] = 1.0
f3 = FourierFunction(2, coeffs)
rep3 = variance_series(f3, S)
print("\nthree chained modes:")
print("  correlations:", {n: rep3.values[n] for n in sorted(rep3.values)})
print("  sigma2 =", rep3.sigma2, " (= 6 + 2*(4+2))")
for n in (8, 64, 1024, 2 ** 14):
    (v,) = rep3.variance_profile([n])
    print(f"  Var(S_n)/n at n={n:6d}: {v:.10f}   (sigma2 - 16/n = {18 - 16 / n:.10f})")

# a vector observable on two disjoint dual orbits has diagonal Sigma
fv = FourierFunction(2, [{(1, 0): 1.0, (-1, 0): 1.0},
                         {(1, 1): 1.0, (-1, -1): 1.0}])
repv = variance_series(fv, S)
print("\nvector observable Sigma:\n", repv.Sigma)
