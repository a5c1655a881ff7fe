# %% [markdown]
# # Mutations of exceptional collections and orbit search
#
# B_4 acts on 4-term exceptional collections by mutations and Z^4 by shifts;
# on K0 the shifts only leave a sign.

# %%
import random

from hirzebruch import GroupElement, apply_group_element, gram, orbit_search, standard_collection, sigma23_square_check
from hirzebruch.certify import verify_certificate

std = standard_collection(2)
for row in gram(2, std):
    print(row)

# %% [markdown]
# Scramble the standard collection with a random word, then search back.

# %%
rng = random.Random(0)
word = tuple(rng.choice([(k, s) for k in (1, 2, 3) for s in (1, -1)]) for _ in range(5))
scrambled = apply_group_element(std, GroupElement((1, 0, 0, 1), word))
g = orbit_search(2, scrambled, std, max_depth=5)
print("word:", word)
print("certificate:", g.to_json())
print("independently verified:", verify_certificate(2, scrambled, std, g))

# %% [markdown]
# On F_0 the middle pair of (O, O(0,1), O(1,0), O(1,1)) is fully orthogonal,
# so the square of the middle braid generator fixes the collection.

# %%
print(sigma23_square_check(0).to_json())
