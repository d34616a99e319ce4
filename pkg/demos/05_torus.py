"""Sign flips on the localized Weyl algebra.

The B and D conventions differ in where the sign goes, but both send
t = d x to 2 - t and act on the lattice by e_i -> -e_i.
"""

from galoisweyl import GroupDescriptor, WeylAlgebra, WeylGroupAction

L = WeylAlgebra(1, localized=True)
for kind in ("B-torus", "D-torus"):
    eps = WeylGroupAction(GroupDescriptor(kind, 1), L).epsilon(1)
    print(kind)
    print("  x ->", eps(L.x(1)), "  d ->", eps(L.d(1)))
    print("  t ->", eps(L.t(1)), "  equals 2 - t:", eps(L.t(1)) == 2 - L.t(1))
    print("  involution:", eps.compose(eps).is_identity())
