"""
Symplectic and Kahler pairs
===========================

w1 ^ w2 and w3 ^ w4 are closed, of constant rank, and w12 +- w34 are
symplectic with opposite orientations.
"""

from contactpairs import catalog, kahler_pair_check, verify_symplectic_pair

for name in ("c2", "h2_x_h2", "c_x_h2"):
    m = catalog.load_model(name)
    w12, w34 = m.form("w12"), m.form("w34")
    sp = verify_symplectic_pair(m.algebra, w12, w34)
    kp = kahler_pair_check(m.algebra, w12, w34, m.endomorphism("J"), m.metric("g"))
    print(f"{name}: symplectic pair {sp.valid} (signs {sp.sum_sign}, {sp.difference_sign}),"
          f" Kahler pair {kp.valid}, nabla J = 0 {kp.nabla_J_zero}")

m = catalog.load_model("c2")
print("w12, w12:", verify_symplectic_pair(m.algebra, m.form("w12"), m.form("w12")).valid)
