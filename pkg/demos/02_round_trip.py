# %% [markdown]
# # Getting the group back
#
# A full filter picks one left coset for each subgroup, coherently.  Each
# filter is an automorphism of the groupoid, and together they form a group
# isomorphic to the one we started from.

# %%
from cosetduality import catalog
from cosetduality.equivalence import check_naturality_g, eta_g, eta_m, sample_isomorphisms
from cosetduality.functor_g import enumerate_full_filters, g_of_m
from cosetduality.functor_w import build_w
from cosetduality.perm import all_subgroups

G = catalog.get("Q8")
S = all_subgroups(G)
W = build_w(G, S)
filters = enumerate_full_filters(W)
print(len(filters), "filters for a group of order", G.order)

# %%
GW = g_of_m(W)
e = eta_g(G, S, W)
print("G(W) has order", GW.order, "| η_G bijective homomorphism:", e.is_bijective())

# %% [markdown]
# Going the other way, each coset A becomes the set of filters through it.

# %%
iso = eta_m(W)
print("η_M preserves product, inverse and meet:", bool(iso.check()))

# %% [markdown]
# Relabel the points of Q8 at random, compose with an automorphism, and check
# that η commutes with the induced maps.

# %%
squares = [check_naturality_g(a) for a in sample_isomorphisms(G, 10, seed=4)]
print(sum(map(bool, squares)), "of", len(squares), "squares commute")
