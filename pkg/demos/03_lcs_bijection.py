"""
From a contact pair to a locally conformally symplectic form and back
=====================================================================

omega = d alpha + alpha ^ beta has Lee form beta.  Going back needs an
infinitesimal automorphism X with theta(X) = 1.
"""

from contactpairs import catalog, lcs_to_pair, lee_vector, pair_to_lcs, verify_lcs


def show(v):
    return "(" + ", ".join(str(c) for c in v) + ")"


m = catalog.load_model("nil3_x_r")
alg, alpha, beta = m.algebra, m.form("w3"), m.form("w4")

lcs = pair_to_lcs(alg, alpha, beta)
print("omega =", lcs.omega, " theta =", lcs.theta)
print("Lee vector =", show(lee_vector(alg, lcs)))

# the lcs data are recovered from omega alone
print("verify_lcs(omega) agrees:", verify_lcs(alg, lcs.omega) == lcs)

# back with X = e4 recovers the original pair, and the Reeb field A is the Lee vector
pair, reeb = lcs_to_pair(alg, lcs, (0, 0, 0, 1))
print("X = e4      ->", pair.alpha, ",", pair.beta, " A =", show(reeb.A))

# X = e3 + e4 is another automorphism with theta(X) = 1 and gives a different pair
pair, reeb = lcs_to_pair(alg, lcs, (0, 0, 1, 1))
print("X = e3 + e4 ->", pair.alpha, ",", pair.beta, " B =", show(reeb.B))
