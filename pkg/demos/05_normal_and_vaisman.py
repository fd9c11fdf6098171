"""
Normal metric contact pairs are Vaisman
=======================================

A metric contact pair (alpha, beta, J, g) is normal when J and the conjugate
structure T are integrable.  The associated Hermitian structure is then
Vaisman with Lee form -beta.
"""

from fractions import Fraction

from contactpairs import catalog, is_normal, metric_contact_pair, vaisman_check
from contactpairs.hermitian import associated_metric, fundamental_orientations
from contactpairs.linalg import inverse, matmul

for name in ("sl2r_x_r", "nil3_x_r"):
    m = catalog.load_model(name)
    alg, j, g = m.algebra, m.endomorphism("J"), m.metric("g")
    alpha, beta = m.form("w3"), m.form("w4")
    normal = is_normal(alg, metric_contact_pair(alg, alpha, beta, j, g))
    v = vaisman_check(alg, j, g)
    print(name)
    print("  normal:", normal.normal, " N_J = 0:", normal.J_integrable, " N_T = 0:", normal.T_integrable)
    print("  Vaisman:", v.is_vaisman, " theta =", v.theta, " |theta|^2 =", v.norm_squared)
    print("  J and T orientations opposite:", fundamental_orientations(alg, alpha, beta).opposite)

# a sheared J on SL2~ x R is still compatible with the pair but neither normal nor Vaisman
m = catalog.load_model("sl2r_x_r")
alg, alpha, beta = m.algebra, m.form("w3"), m.form("w4")
p = tuple(tuple(Fraction(x) for x in row) for row in ((1, 1, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)))
js = matmul(matmul(p, m.endomorphism("J")), inverse(p))
gs = associated_metric(alg, alpha, beta, js)
r = is_normal(alg, metric_contact_pair(alg, alpha, beta, js, gs))
print("sheared: normal", r.normal, " witness", r.witness[:3], " Vaisman", vaisman_check(alg, js, gs).is_vaisman)

# on C^2 the Lee form vanishes: the Kahler case
c2 = catalog.load_model("c2")
print("c2:", vaisman_check(c2.algebra, c2.endomorphism("J"), c2.metric("g")).kind)
