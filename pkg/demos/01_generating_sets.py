"""
Generating sets on Hermitian-type curves
========================================

The semigroup of pole vectors at P_1..P_m is pinned down by ``b`` vectors
in a window plus ``m - 1`` lattice shifts.  This script prints them for two
curves x^(ell^r + 1) = y^ell + y and checks them against a brute-force scan.
"""
# %%
from weierstrass import absolute_maximal_by_definition, generating_data, hermitian_type_preset

# %%
# The Hermitian curve over F_25 (ell = 5, r = 1), three points.
c = hermitian_type_preset(5, 1, 3)
print(f"a={c.a} b={c.b} genus={c.genus} q={c.q}")
gd = generating_data(c)
print("window:", ", ".join(str(v) for v in gd.s_m))
print("shifts:", ", ".join(str(v) for v in gd.etas))

# %%
# Each window vector is absolute maximal, which the oracle confirms from
# the definition (no dimension formula involved).
print(all(absolute_maximal_by_definition(c, v) for v in gd.s_m))

# %%
# ell = r = 3: the curve x^28 = y^3 + y over F_729 has 28 window vectors.
c = hermitian_type_preset(3, 3, 3)
gd = generating_data(c)
print(len(gd.all_vectors()), "vectors; last window vector", gd.s_m[-1])
