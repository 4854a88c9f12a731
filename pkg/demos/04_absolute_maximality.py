"""
Absolute maximality, discrepancies and lubs
===========================================

Shifting a generator by the lattice keeps it absolute maximal, while the lub
of two incomparable generators is a semigroup member that is not.
"""
# %%
from weierstrass import is_absolute_maximal, is_discrepancy, is_member, lub, new_curve
from weierstrass.semigroup import translate

c = new_curve(5, 6, 3)
beta = (13, 1, 1)
shifted = translate(beta, c, [1, 0])
print(shifted, is_absolute_maximal(c, shifted))

# %%
pairs = [(i, j) for i in (1, 2, 3) for j in (1, 2, 3) if i != j]
joint = lub([beta, (8, 2, 2)])
print(joint, "member:", is_member(c, joint), "absolute maximal:", is_absolute_maximal(c, joint))
print({p: is_discrepancy(c, joint, *p) for p in pairs})
