# # Extension groups for the K-theory of spheres
#
# K(S^2n) is the ring of dual numbers Z + Zy with Psi^k(y) = k^n y.
# Extensions by the reduced K-theory of S^2n' are classified by a free part
# (the Hopf invariant h) and a cyclic part of order G(n, n'), the gcd of all
# l^n - l^n'.

# %%
from psiring import big_G, extalg_lambda, extalg_psi, stable_table
from psiring.spheres import big_G_bruteforce, format_stable_table

for n, m in [(1, 2), (2, 4), (3, 6), (4, 8)]:
    print(f"G({n},{m}) = {big_G(n, m).value}  (brute force {big_G_bruteforce(n, m, 200)})")

# %%
print(extalg_psi(2, 4))
print(extalg_lambda(2, 4))
print(extalg_lambda(3, 6))
print(extalg_lambda(1, 3))

# %% [markdown]
# In the stable range n > k + 1 the lambda groups only depend on k, and
# the torsion orders track the image of J.

# %%
print(format_stable_table(stable_table(8)))
