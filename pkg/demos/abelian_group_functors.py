"""Hom, Ext^1, tensor, and Tor_1 on finitely generated abelian groups.

Groups live in invariant-factor normal form, so equality is literal
tuple equality and every functor is computed exactly.  The second half
applies the exterior square to recover H_2 of an abelian group and the
cohomological Brauer group of its second Eilenberg-MacLane space.
"""

from cwbrauer.abgroup import (FgAbGroup, brauer_of_k_g_2, exterior_square,
                              ext1, h2_of_abelian_group, hom, tensor, tor1)

Z = FgAbGroup.free(1)
a = FgAbGroup(free_rank=1, invariant_factors=(2, 6))   # Z + Z/2 + Z/6
b = FgAbGroup(free_rank=0, invariant_factors=(4,))     # Z/4

print(f"A = {a}")
print(f"B = {b}\n")

print(f"Hom(A, B)   = {hom(a, b)}")
print(f"Ext^1(A, B) = {ext1(a, b)}")
print(f"A (x) B     = {tensor(a, b)}")
print(f"Tor_1(A, B) = {tor1(a, b)}")

# Two classical identities, checked on the nose:
print(f"\nExt^1(A, Z) = {ext1(a, Z)}  (the torsion of A, free part gone)")
assert ext1(a, Z) == a.torsion_part()
assert hom(a, Z) == FgAbGroup.free(a.free_rank)

# Exterior squares: bilinear + alternating, so cyclic groups contribute
# nothing alone and pairs contribute their gcd.
g = FgAbGroup(0, (2, 4, 8))
print(f"\nLambda^2({g}) = {exterior_square(g)}")
print(f"Lambda^2(Z/9) = {exterior_square(FgAbGroup.cyclic(9))}  (cyclic)")
print(f"Lambda^2(Z^3) = {exterior_square(FgAbGroup.free(3))}"
      "  (rank 3 choose 2)")

# For an abelian group, H_2 of the group is exactly its exterior square.
assert h2_of_abelian_group(g) == exterior_square(g)

# The second Eilenberg-MacLane space of g: Br' is the torsion of
# Ext^1(g, Z) = g itself here, while the honest Brauer group vanishes.
kg = brauer_of_k_g_2(g)
print(f"\nK({g}, 2):  Br' = {kg.br_prime},  Br = {kg.br},"
      f"  strict containment: {kg.strict}")
print(f"  note: {kg.note}")
