# %% [markdown]
# # Cosets of the 2-adic integers, level by level
#
# Z/2 ← Z/4 ← Z/8 ← Z/16.  A coset of 2^d·Z₂ is a residue mod 2^d, and the
# groupoid operations only need residues.

# %%
from cosetduality.profinite import (DepthFilter, LevelCoset, depth_filters, lazy_eager_iso,
                                    level_ops, refine_filter, two_adic_tower)

tower = two_adic_tower(4)
ops = level_ops(tower)
odd = LevelCoset(1, 1)
print("1+2Z ∧ 1+4Z =", ops.meet(odd, LevelCoset(2, 1)))
print("(1+2Z)+(1+2Z) =", ops.product(odd, odd))

# %% [markdown]
# Filters at depth d are residues mod 2^d; refining one branches in two.

# %%
for d in range(5):
    print(d, len(depth_filters(tower, d)), "filters | lazy tables match coset tables:",
          bool(lazy_eager_iso(tower, d).check()))

# %%
print([tower.labels[3][f.x] for f in refine_filter(tower, DepthFilter(1, 1), 3)])
