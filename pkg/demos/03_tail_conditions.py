#!/usr/bin/env python3
# Fourier tail conditions: who satisfies what.
#
# The lacunary sine series (modes at 2^l, amplitudes l^(-gamma/q)) has
# q-tails that decay like (log b)^(1-gamma): fast enough for the
# logarithmic conditions once gamma is large, but never fast enough for
# a polynomial bound b^(-zeta). The product-bound family is the
# opposite: its 2-tails decay polynomially.

import math

from toruslab import (LacunaryFamily, LeonovFamily, TailConditionSpec,
                      tail_sum, truncate, verify_condition)

q = 1.5  # dual exponent of p = 3

print("lacunary q-tails against the Hurwitz-zeta closed form:")
fam = LacunaryFamily(dim=2, gamma=2.0, q=q, max_level=20)
for b in (2, 16, 1024, 2 ** 30):
    r = max(1, (b - 1).bit_length())
    direct = sum(2.0 * ell ** -2.0 for ell in range(r, 100_000))
    print(f"  b = 2^{b.bit_length()-1:2d}: tail = {tail_sum(fam, q, b):.8f}"
          f"  direct sum = {direct:.8f}")

print("\nfitted decay exponents on log-log-log axes:")
grid = [2 ** r for r in range(8, 97, 8)]
for gamma in (1.5, 2.0, 3.0):
    fam = LacunaryFamily(dim=2, gamma=gamma, q=q, max_level=20)
    spec = TailConditionSpec(exponent=q, kind="log_power", R=10.0, theta=1.5)
    fit = verify_condition(fam, spec, grid).fitted_exponent
    spec2 = TailConditionSpec(exponent=2.0, kind="log_power", R=10.0, theta=1.5)
    fit2 = verify_condition(fam, spec2, grid).fitted_exponent
    print(f"  gamma={gamma}: q-tail slope {fit:+.3f} (theory {1-gamma:+.1f}), "
          f"2-tail slope {fit2:+.3f} (theory {1-2*gamma/q:+.2f})")

print("\nthe polynomial condition fails for the lacunary family at large b:")
fam = LacunaryFamily(dim=2, gamma=3.0, q=q, max_level=20)
poly = TailConditionSpec(exponent=2.0, kind="polynomial", R=100.0, zeta=1.0)
rep = verify_condition(fam, poly, [2 ** r for r in (8, 24, 48, 72)])
for b, t, bd, ok in zip(rep.b_grid, rep.tails, rep.bounds, rep.holds):
    print(f"  b = 2^{b.bit_length()-1:2d}: tail {t:.3e} vs bound {bd:.3e} -> "
          f"{'holds' if ok else 'FAILS'}")

print("\nLeonov product family: truncation error obeys the polynomial bound:")
fam = LeonovFamily(dim=2, A=1.0, alpha=1.5, q=4 / 3, radius=24)
f = fam.function()
spec = fam.polynomial_spec()
print(f"  implied condition: 2-tail <= {spec.R:.2f} * b^-{spec.zeta}")
for m in (2, 5, 10, 20):
    gap = math.sqrt(f.norm2_sq() - truncate(f, m).norm2_sq())
    print(f"  m={m:2d}: ||f - f_m||_2 = {gap:.6f} <= "
          f"{math.sqrt(spec.R) * m ** (-spec.zeta / 2):.6f}")
