"""Averaging over a group and testing whether supports generate Z^n."""

from galoisweyl import (
    GroupDescriptor, SupportSet, WeylAlgebra, gamma_generators, invariant_generator_supports,
    is_invariant, monoid_generates, reynolds,
)
from galoisweyl.ratfunc import VariableContext
from galoisweyl.scalars import ScalarField

A = WeylAlgebra(2, field=ScalarField(3))
G = GroupDescriptor.G(3, 1, 2)
a = A.x(1) ** 3 * A.d(2) + A.x(1) * A.d(1)
r = reynolds(G, a)
print("R(a) =", r, " invariant:", bool(is_invariant(G, r)))

T = VariableContext(("t1", "t2"))
print("Gamma generators for", G, ":", [str(g) for g in gamma_generators(G, T)])

# supports of the invariant generators reach every +-e_i
print("invariant supports:", monoid_generates(invariant_generator_supports(3, 2)).verdict)
v = monoid_generates(SupportSet(2, frozenset({(1, 0), (0, 1)})))
print("{e1, e2}:", v.verdict, v.certificate)
v = monoid_generates(SupportSet(2, frozenset({(1, 1), (-1, 0), (0, -1)})))
print("{e1+e2, -e1, -e2}:", v.verdict, v.witnesses)
