"""
Supported floor versus floor
============================

The supported floor is the smallest divisor on P_1..P_m with the same
Riemann-Roch space.  With all a+1 points it is the floor itself.
"""
# %%
from weierstrass import floor_by_exhaustion, full_floor, gamma_below, lub, new_curve, supported_floor

c3 = new_curve(3, 28, 3)
alpha = (8, 7, -1)
print("closed form      ", supported_floor(c3, alpha))
print("lub of generators", lub(gamma_below(c3, alpha)))
print("min-norm search  ", floor_by_exhaustion(c3, alpha))

# %%
# Adding the fourth point P_0w' with coefficient 0: the floor drops to -1 there.
c4 = c3.with_m(4)
print(full_floor(c4, alpha + (0,)))
