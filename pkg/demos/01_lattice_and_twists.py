# %% [markdown]
# # The Grothendieck lattice of F_2 and spherical twists
#
# Classes are (rank, c1, 2*ch2) with c1 = x F + y C. We start with the
# Euler pairing and compare it with honest line-bundle cohomology.

# %%
from hirzebruch import (
    C, F, DivisorClass, euler_form, line_bundle_class, line_bundle_cohomology,
    structure_sheaf, torsion_class_OC, twist_class, compose_adjacent_twists,
)
from hirzebruch.twist import tensor_by_C

O = structure_sheaf()
OF = line_bundle_class(2, F)
print("chi(O, O(F)) =", euler_form(2, O, OF))
print("H^*(O(F))    =", line_bundle_cohomology(2, F).as_tuple())

# %% [markdown]
# Line bundles on the (-2)-curve are spherical: chi(u, u) = 2.

# %%
for a in (-2, 0, 3):
    u = torsion_class_OC(a)
    print(f"O_C({a}) = {u},  chi(u, u) = {euler_form(2, u, u)}")

# %% [markdown]
# On K0 a twist is the reflection v -> v - chi(u, v) u. Twisting twice does
# nothing, and O_C(-1) leaves O alone.

# %%
v = line_bundle_class(2, DivisorClass(3, -1))
for a in (-1, 0, 4):
    tv = twist_class(a, v)
    print(f"a={a}: T v = {tv}, T T v == v: {twist_class(a, tv) == v}")
print("T_{O_C(-1)} O == O:", twist_class(-1, O) == O)

# %% [markdown]
# Two adjacent twists compose to tensoring with O(C).

# %%
for a in range(-2, 3):
    print(a, compose_adjacent_twists(a, v) == tensor_by_C(v))
