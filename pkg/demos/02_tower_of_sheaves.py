# %% [markdown]
# # Exceptional sheaves sharing one class
#
# Every exceptional bundle E on F_2 sits at the bottom of a tower E_i that all
# share the class [E]. Entries with i >= 0 pick up torsion on C, entries with
# i <= -2 are two-term complexes.

# %%
from hirzebruch import (
    K0Class, DivisorClass, classify_sheaves_sharing_class, enumerate_exceptional_classes,
    check_table_consistency, restriction_profile, tower_entry,
)

# a rank-5 class whose restriction to C is O_C(0)^4 + O_C(1)
v = K0Class(5, DivisorClass(-3, -2), -4)
print(restriction_profile(v))
for i in range(-3, 4):
    e = tower_entry(v, i)
    print(f"E_{i:>2}: {e.kind.value:<17} torsion O_C({e.torsion_degree})^{e.torsion_mult:<3} total == v: {e.total == v}")

# %% [markdown]
# The Ext table among torsion part, sheaf and free part agrees with the Euler
# form once t = r^2 and f = 1.

# %%
print(all(check_table_consistency(v, i) for i in range(0, 6)))

# %% [markdown]
# Classification report, with sign normalization applied to -[E].

# %%
report = classify_sheaves_sharing_class(-v, tower_max=3)
print(report.root, report.profile, "E_-1 = E_0:", report.e_minus1_iso_e0)

# %% [markdown]
# There are no rank-0 or rank-2 exceptional classes on F_2.

# %%
box = enumerate_exceptional_classes(2, rank=(-6, 6), x=(-6, 6), y=(-6, 6))
print(len(box), "classes; ranks present:", sorted({c.rank for c in box}))
