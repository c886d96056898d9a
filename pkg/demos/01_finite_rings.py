"""Finite rings from structure constants: closures, quotients, predicates.

Run:  python3 demos/01_finite_rings.py
"""

from finsys import catalog
from finsys.finring import (
    center,
    ideal_closure,
    is_simple,
    quotient_ring,
    ring_from_spec,
    subgroup_closure,
    unitality_predicates,
)

# A ring is its additive group (a product of cyclic groups) plus the products
# of basis pairs; everything else is the biadditive extension.
F4 = ring_from_spec([2, 2], {(0, 0): (1, 0), (0, 1): (0, 1),
                             (1, 0): (0, 1), (1, 1): (1, 1)}, name="F4")
print(f"{F4.name}: order {F4.order}, associative={F4.is_associative}, "
      f"commutative={F4.is_commutative}")
x = (0, 1)
print(f"  x * x = {F4.mul(x, x)}   (x^2 = x + 1 in the field with 4 elements)")

M2 = catalog.matrix_ring(catalog.prime_field(2), 2)
print(f"\n{M2.name}: order {M2.order}, commutative={M2.is_commutative}")
print(f"  center = {sorted(center(M2).elements)}  (zero and the identity)")
print(f"  simple: {is_simple(M2)} -- every nonzero matrix generates everything:")
e12 = (0, 1, 0, 0)
print(f"  ideal generated by E12 has {len(ideal_closure(M2, [e12]))} elements")

# Quotients pick lexicographically minimal coset representatives.
Z4 = catalog.cyclic_ring(4)
q = quotient_ring(Z4, ideal_closure(Z4, [(2,)]))
print(f"\nZ4 / (2): order {q.ring.order}, "
      f"projection of 3 is {q.project((3,))}")

# Predicates are decided by scans, so odd rings are handled honestly.
B = catalog.left_only_ring(catalog.prime_field(2))
flags = unitality_predicates(B)
print(f"\n{B.name} (pairs with (a,b)(c,d) = (ac, ad)):")
print(f"  left unital:   {flags['left_unital']}")
print(f"  right s-unital: {flags['right_s_unital']}  "
      "(no element fixes (0,1) from the right)")

# Additive closures never leave the enumerated world.
prod = catalog.product_ring(catalog.prime_field(2), catalog.prime_field(2))
sub = subgroup_closure(prod, [(1, 0)])
print(f"\nsubgroup of F2 x F2 generated by (1,0): {sorted(sub.elements)}")
