"""Generalized Weyl algebras: cyclic invariants and quantum examples."""

from galoisweyl import (
    cyclic_invariant, gwa_check_axioms, gwa_embed, gwa_from_invariants, uqsl2, witten1,
    woronowicz,
)

# invariants of x -> zeta x, d -> zeta^-1 d in A_1 form a rank-one GWA
for m in (1, 2, 3):
    A = cyclic_invariant(m, 1)
    print(f"m={m}: a = {A.a[0]}")
cert = gwa_from_invariants(3, 1)
print("generator products verified:", cert.pairs_checked, "passed:", cert.passed)
print("derived a:", cert.a_derived[0], "  printed-product formula:", cert.a_printed[0])

# U_q(sl2) as a GWA over Q(q)[c, h^+-1]
U = uqsl2()
print("\nU_q(sl2): a =", U.a[0])
print("Xp*Xm     =", U.Xp(1) * U.Xm(1))
print("embedded  =", gwa_embed(U.Xp(1) * U.Xm(1)))

for A in (U, witten1(), woronowicz()):
    rep = gwa_check_axioms(A)
    print(f"{A.name:12s} axioms:", "pass" if rep.passed else "fail")

# the Woronowicz shift as printed is singular
rep = gwa_check_axioms(woronowicz("printed"))
print("woronowicz(printed) sigma invertible:", rep.check("sigma_invertible").passed)
for note in woronowicz().notes:
    print("note:", note)
