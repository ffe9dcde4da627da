"""Cohomology from homology: universal coefficients, Bockstein, Kuenneth.

A chain complex is a tuple of ranks plus boundary matrices (checked to
square to zero).  This script builds the cellular complex of a lens-like
space by hand, splits its integral cohomology into Ext and Hom parts,
computes mod-m cohomology, and exhibits the Bockstein as an honest
isomorphism onto the torsion it detects.  A product of two such
complexes closes the loop against the Kuenneth formula.
"""

from cwbrauer.abgroup import (FgAbGroup, GroupHom, exterior_square, tensor,
                              tor1)
from cwbrauer.chaincx import (ChainComplex, bockstein, cohomology, homology,
                              tensor_complexes, uct_decompose)

# One cell in each degree 0..3, with del_2 = multiplication by 5:
# the 3-dimensional complex whose only interesting homology is H_1 = Z/5.
lens = ChainComplex(ranks=(1, 1, 1, 1),
                    boundaries=([[0]], [[5]], [[0]]))
print(f"complex: {lens}, Euler characteristic "
      f"{lens.euler_characteristic()}")

print("\nhomology and integral cohomology:")
for n in range(4):
    print(f"  H_{n} = {str(homology(lens, n)):6}  H^{n} = "
          f"{cohomology(lens, n)}")

print("\nuniversal coefficients in degree 2 "
      "(torsion climbs from H_1, free part comes from H_2):")
u = uct_decompose(lens, 2)
print(f"  H^2 = Ext^1(H_1, Z) + Hom(H_2, Z) = {u.ext_part} + {u.hom_part}"
      f" = {u.total}")

print("\nmod-5 cohomology sees the torsion twice:")
for n in range(4):
    print(f"  H^{n}(; Z/5) = {cohomology(lens, n, modulus=5)}")

# The Bockstein H^1(; Z/5) -> H^2(; Z) carries the mod-5 class onto the
# integral torsion class: an isomorphism here, and 5 * beta = 0 always.
beta = bockstein(lens, 1, 5)
print(f"\nBockstein beta : {beta.domain} -> {beta.codomain}")
print(f"  matrix {beta.matrix.to_lists()},  injective and onto the "
      "5-torsion")
assert not beta.is_zero()
times5 = GroupHom.scalar(beta.codomain, beta.codomain, 5)
assert times5.compose(beta).is_zero()   # 5 * beta = 0, always

# Kuenneth: homology of a tensor product from the factors' homology,
# one tensor term per split p + q = n and one Tor term per p + q = n - 1.
def kunneth_prediction(c, d, n):
    out = FgAbGroup.trivial()
    for p in range(n + 1):
        out = out.direct_sum(tensor(homology(c, p), homology(d, n - p)))
    for p in range(n):
        out = out.direct_sum(tor1(homology(c, p), homology(d, n - 1 - p)))
    return out

prod = tensor_complexes(lens, lens)
print(f"\nproduct complex: {prod}")
for n in (2, 3):
    hn = homology(prod, n)
    print(f"  H_{n}(product) = {hn}  (Kuenneth predicts "
          f"{kunneth_prediction(lens, lens, n)})")
    assert hn == kunneth_prediction(lens, lens, n)

# H_2 of the product doubles as an exterior-square identity check:
h1 = homology(lens, 1)
print(f"  exterior square of H_1 + H_1 = {h1.direct_sum(h1)} is "
      f"{exterior_square(h1.direct_sum(h1))}, matching H_2 above")
