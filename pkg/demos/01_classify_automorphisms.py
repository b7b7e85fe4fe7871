#!/usr/bin/env python3
# Exact classification of toral automorphisms.
#
# A unimodular integer matrix acts on the d-torus; the induced system is
# ergodic iff no eigenvalue is a root of unity, hyperbolic iff no
# eigenvalue sits on the unit circle. Both are decided in exact integer
# arithmetic here -- no eigenvalue is ever computed in floating point to
# make the call.

from toruslab import AutoMatrix, classify
from toruslab.automorphism import salem_companion
from toruslab.intpoly import cyclotomic

catalog = {
    "identity": AutoMatrix.identity(2),
    "swap (permutation)": AutoMatrix([[0, 1], [1, 0]]),
    "cat map [[2,1],[1,1]]": AutoMatrix.cat_map(),
    "fibonacci [[0,1],[1,1]]": AutoMatrix([[0, 1], [1, 1]]),
    "shear [[1,1],[0,1]]": AutoMatrix([[1, 1], [0, 1]]),
    "block cat (+) 90-degree rotation": AutoMatrix.block_diag(
        AutoMatrix.cat_map(), AutoMatrix.companion(cyclotomic(4))),
    "Salem companion (quartic)": salem_companion(),
}

print(f"{'matrix':35s} {'charpoly':22s} {'ergodic':8s} {'hyperbolic':10s} witness")
for name, S in catalog.items():
    c = classify(S)
    poly = " + ".join(f"{a}x^{i}" for i, a in enumerate(S.charpoly) if a)
    witness = c.cyclotomic_witness if c.cyclotomic_witness is not None else (
        f"|lambda|={abs(c.unit_circle_witness):.6f}"
        if c.unit_circle_witness else "-")
    print(f"{name:35s} {poly:22s} {str(c.ergodic):8s} "
          f"{str(c.hyperbolic):10s} {witness}")

# The Salem companion is the interesting row: ergodic (its quartic is
# irreducible and non-cyclotomic) yet NOT hyperbolic -- one conjugate
# eigenvalue pair lies exactly on the unit circle. The Sturm count that
# certifies this is exact rational arithmetic.
S = salem_companion()
print("\nSalem charpoly:", S.charpoly)
print("classification JSON:", classify(S).to_json())
