"""
Dimensions and monomial bases of Riemann-Roch spaces
====================================================

For D = 8 P_inf + 7 P_00 - P_0w on x^28 = y^3 + y we compute ell(D), the
per-index summands and an explicit basis in the functions h and g_j.
"""
# %%
import numpy as np

from weierstrass import basis, dim_by_class_counting, dimension, dimension_many, new_curve, pole_vector

c = new_curve(3, 28, 3, 729)
alpha = (8, 7, -1)

# %%
br = dimension(c, alpha)
print("ell =", br.total, "| nonzero summands at i =", br.support())

# %%
# h plays the role of x here, so the basis is {x^2, x}.
for mono in basis(c, alpha):
    print(mono, "pole vector", pole_vector(c, mono))

# %%
# Counting distinct coordinates among generating-set elements below alpha
# gives the same dimension, whichever coordinate is used.
print([dim_by_class_counting(c, alpha, j) for j in (1, 2, 3)])

# %%
# The vectorised form evaluates whole grids; beyond degree 2g - 2 the
# dimension is deg + 1 - g.
rng = np.random.default_rng(0)
grid = rng.integers(-84, 84, size=(5, 3))
grid[:, 0] = 53 - grid[:, 1] - grid[:, 2] + rng.integers(0, 50, size=5)
print(np.c_[grid.sum(axis=1) + 1 - c.genus, dimension_many(c, grid)])
