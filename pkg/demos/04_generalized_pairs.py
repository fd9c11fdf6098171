"""
The one-parameter family d alpha + c alpha ^ beta
=================================================

With a formal parameter the top power of omega_c is a polynomial in c, and
its roots are the excluded values.
"""

from fractions import Fraction

from contactpairs import catalog, ce_differential, generalized_to_lcs, two_form_rank
from contactpairs.pairs import FORMAL

m = catalog.load_model("nil3_x_r")
alg, alpha, beta = m.algebra, m.form("w3"), m.form("w4")

adm = generalized_to_lcs(alg, alpha, beta, FORMAL)
print("top coefficient in c:", [str(x) for x in adm.coefficients], " admissible:", adm.describe())

for c in (Fraction(1), Fraction(2), Fraction(-1), Fraction(1, 2)):
    lcs = generalized_to_lcs(alg, alpha, beta, c)
    print(f"c = {c}: omega =", lcs.omega, " theta =", lcs.theta)

print("c = 0: rank of d alpha =", two_form_rank(ce_differential(alg, alpha)))

h = catalog.load_model("h2_x_h2")
adm = generalized_to_lcs(h.algebra, h.form("alpha"), h.form("beta"), FORMAL)
print("h2_x_h2: coefficients", [str(x) for x in adm.coefficients], " excluded", [str(x) for x in adm.excluded])
