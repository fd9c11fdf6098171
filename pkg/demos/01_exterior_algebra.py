"""
Exact exterior algebra on a Lie algebra
=======================================

Forms have rational coefficients, so every identity below is an equality,
not a tolerance check.
"""

from contactpairs import catalog, ce_differential, check_jacobi, coframe, interior, power, two_form_rank, wedge

w1, w2, w3, w4 = coframe(4)

# wedge is graded commutative
a, b = w1 + 2 * w3, w2 ^ w4
print("a ^ b =", a ^ b)
print("b ^ a =", wedge(b, a))

# interior product is an antiderivation
x = (1, 0, 1, 0)
print("i_x(a ^ b) =", interior(x, a ^ b))

# the Chevalley-Eilenberg differential of the Heisenberg factor: d w3 = -w1 ^ w2
nil = catalog.load_model("nil3_x_r").algebra
print("Jacobi holds:", check_jacobi(nil))
print("d w3 =", ce_differential(nil, w3))
print("d d w3 =", ce_differential(nil, ce_differential(nil, w3)))

# rank of a 2-form and its top power
omega = -(w1 ^ w2) + (w3 ^ w4)
print("rank omega =", two_form_rank(omega))
print("omega ^ omega =", power(omega, 2))
