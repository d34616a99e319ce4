"""Splitting G(m,p,n)-invariants into eigencomponents of a G(m,1,n) element.

For G(2,2,2) and h = diag(-1, 1) the split always works.  The stronger
claim that each component is (x1 x2)^k times a G(2,1,2)-invariant fails
for d1*d2: it is an eigenvector with eigenvalue -1 but has no x-factor.
Dividing in the localized algebra repairs it.
"""

from galoisweyl import GroupElement, WeylAlgebra, eigen_decompose

A = WeylAlgebra(2)
h = GroupElement((1, 0), (0, 1))
for text, a in (("x1*x2", A.x(1) * A.x(2)),
                ("x1^2 + x2^2", A.x(1) ** 2 + A.x(2) ** 2),
                ("d1*d2", A.d(1) * A.d(2))):
    res = eigen_decompose(2, 2, 2, h, a)
    print(f"{text}:")
    for k, (P, q) in enumerate(zip(res.components, res.quotients)):
        print(f"  P{k} = {P}   quotient = {q}   polynomial = {res.polynomial[k]}")
    print("  decomposition holds:", res.decomposition_holds, "  certificate:", res.passed)
