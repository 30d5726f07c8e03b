# %% [markdown]
# # The coset groupoid of S3
#
# Every left coset of every subgroup of S3, plus ∅, with the partial
# product A·B (defined when the frames match), inverse and intersection.

# %%
from cosetduality import catalog
from cosetduality.functor_w import build_w
from cosetduality.groupoid import check_axioms, idempotent_order_dot, idempotents
from cosetduality.perm import all_subgroups

G = catalog.get("S3")
S = all_subgroups(G)
W = build_w(G, S)
print(W.size, "elements,", len(idempotents(W)), "idempotents")

# %% [markdown]
# Products are only defined between a left U coset and a right U coset.

# %%
defined = (W.product_table >= 0).sum()
print(f"{defined} of {W.size ** 2} products are defined")
a, b = 7, W.inv(7)
print(W.label(a), "·", W.label(b), "=", W.label(W.mul(a, b)))

# %%
report = check_axioms(W)
print("axioms hold:", report.passed, "| clauses checked:", len(report.checked))

# %% [markdown]
# The idempotents ordered by inclusion are the subgroup lattice.

# %%
print(idempotent_order_dot(W))
