# # The extension lab
#
# Each extension is a rank-3 integer model with basis (gamma, beta, alpha),
# beta^2 = h alpha, and Adams matrices fixed by the numbers nu_k.  The lab
# checks the axioms directly and counts equivalence classes.

# %%
from psiring import ExtensionModel, big_G, enumerate_classes, extalg_lambda, lab_report

m = ExtensionModel.from_nu2(2, 4, 1, 1)
for key, value in lab_report(m).items():
    print(f"{key:>18}: {value}")

# %% [markdown]
# When n' != 2n the check Psi^k(beta^2) = Psi^k(beta)^2 kills every h != 0.

# %%
print(lab_report(ExtensionModel.from_nu2(1, 3, 1, 0))["ring_homomorphism"])

# %% [markdown]
# Counting classes for n' = 2n with the specialness check switched on
# reproduces the congruence description, including which n allow odd h.

# %%
for n in range(1, 6):
    labels = enumerate_classes(n, 2 * n, [0, 1], special_only=True)
    odd = sorted(z for h, z in labels if h % 2)
    print(f"n={n}  G={big_G(n, 2 * n).value:<5} classes={len(labels):<5} odd h at z={odd[:6]}")
print(extalg_lambda(4, 8))
