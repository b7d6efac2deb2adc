# # Odd Hopf invariant from the lambda-structure
#
# An extension of K(S^2n) by K~(S^4n) can carry odd h only when n is at
# most the 2-adic exponent g(2, n).  That leaves n = 1, 2, 4.

# %%
from psiring import adams_scan, odd_hopf_feasible

print("n with odd h for (n, 2n):", adams_scan(2, 100))

# %%
for n, m in [(2, 4), (3, 6), (3, 9), (5, 5), (4, 12)]:
    rep = odd_hopf_feasible(n, m)
    print(f"({n},{m}): {'feasible' if rep.feasible else 'infeasible'}  [{rep.reason}]  case {rep.theorem_case}")

# %% [markdown]
# For (3, 3a) the answer flips with the parity of a.

# %%
print({a: odd_hopf_feasible(3, 3 * a).feasible for a in range(2, 10)})
