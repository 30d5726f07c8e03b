# %% [markdown]
# # Aut(D4) from the coset action
#
# D4 acts on the 35 left cosets of its subgroups.  Automorphisms of D4 are
# recovered as the normalizer of that action modulo its centralizer.

# %%
from cosetduality import catalog
from cosetduality.autgroup import AutContext, aut_report
from cosetduality.perm import all_subgroups

G = catalog.get("D4")
S = all_subgroups(G)
ctx = AutContext(G, S)
print("|Ω| =", ctx.omega_size, "| |C| =", ctx.centralizer.order)
print("|Aut| =", ctx.pres.aut.order, "| |Inn| =", len(ctx.pres.inn), "| |Out| =", ctx.pres.out_order)

# %% [markdown]
# Every product h·c of an induced permutation and a centralizing one maps
# back to the automorphism h came from.

# %%
gam = ctx.hc_gamma
print(len(gam), "products,", len(set(gam.tolist())), "distinct automorphisms recovered")

# %%
report = aut_report(G, S)
for c in report["checks"]:
    print("pass" if c["passed"] else "FAIL", c["name"])
