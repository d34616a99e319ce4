"""Differential operators as skew polynomials.

Walk through the Weyl algebra, its normal form and the map into the skew
monoid ring L*Z^n with x_i -> e_i and d_i -> t_i e_i^-1.
"""

from galoisweyl import WeylAlgebra, evaluate, weyl_embed, weyl_express_in_t

A = WeylAlgebra(2)
x1, x2, d1, d2 = A.x(1), A.x(2), A.d(1), A.d(2)

# commuting d past x produces the correction term
print("d1*x1          =", d1 * x1)
print("d1^2*x1^2      =", d1 ** 2 * x1 ** 2)
print("[d1, x2]       =", d1 * x2 - x2 * d1)

# t_i = d_i x_i generate a commutative subalgebra
print("d1^2 x1^2 in t =", weyl_express_in_t(d1 ** 2 * x1 ** 2))

# the embedding is multiplicative
a = evaluate("x1*d2 + 3*d1^2", A)
b = evaluate("x2^2 - d1*x1", A)
print("embed(a)       =", weyl_embed(a))
print("embed(ab) == embed(a)embed(b):", weyl_embed(a * b) == weyl_embed(a) * weyl_embed(b))
print("support of ab  =", sorted(weyl_embed(a * b).support()))

# inverting x gives differential operators on the torus
L = WeylAlgebra(1, localized=True)
print("d1*x1^-1       =", L.d(1) * L.xinv(1))
