"""
Contact pairs and their Reeb fields
===================================

On SL2~ x R and Nil3 x R the pair (w3, w4) is a contact pair of type (1, 0).
"""

from contactpairs import catalog, ce_differential, reeb_fields, verify_contact_pair, wedge


def show(v):
    return "(" + ", ".join(str(c) for c in v) + ")"


for name in ("sl2r_x_r", "nil3_x_r"):
    m = catalog.load_model(name)
    alg, alpha, beta = m.algebra, m.form("w3"), m.form("w4")
    report = verify_contact_pair(alg, alpha, beta, 1, 0)
    print(name)
    print("  d alpha =", ce_differential(alg, alpha))
    print("  alpha ^ d alpha ^ beta =", wedge(wedge(alpha, ce_differential(alg, alpha)), beta))
    print("  contact pair:", report.is_pair, "volume sign", report.volume_sign)
    rf = reeb_fields(alg, alpha, beta)
    print("  A =", show(rf.A), " B =", show(rf.B), " [A, B] = 0:", rf.commuting)

# swapping the roles breaks the type: w4 is closed, so it cannot carry the contact part
m = catalog.load_model("nil3_x_r")
print("swapped:", verify_contact_pair(m.algebra, m.form("w4"), m.form("w3"), 1, 0).is_pair)

# a generalized-only pair: the top form is a volume, but alpha ^ d alpha ^ ... is not of pair type
h = catalog.load_model("h2_x_h2")
r = verify_contact_pair(h.algebra, h.form("alpha"), h.form("beta"), 1, 0)
print("h2_x_h2 alpha = w2 + w4, beta = w1: pair", r.is_pair, "generalized only", r.is_generalized_only)
