# # Universal polynomials by the splitting principle
#
# lambda^i(rs) and lambda^i(lambda^j(r)) are polynomials in the lambda^k of
# r and s.  We recover them by writing r and s as sums of formal roots and
# rewriting the resulting symmetric functions in elementary symbols.

# %%
from psiring import SymmetricContext, express_in_elementary, parse_poly, universal_P, universal_Pij

print(express_in_elementary(parse_poly("x1^2 + x2^2")))  # e1^2 - 2*e2

# %%
for i in range(1, 4):
    print(f"P_{i} =", universal_P(i))

# %%
for i, j in [(2, 2), (2, 3), (3, 2)]:
    print(f"P_{i},{j} =", universal_Pij(i, j))

# %% [markdown]
# Two root sets at once: the target names r and s receive the elementary
# symbols of x and y respectively.

# %%
ctx = SymmetricContext(roots=(("x", 2), ("y", 2)), targets=("r", "s"))
f = parse_poly("x1*y1 + x1*y2 + x2*y1 + x2*y2")
print(express_in_elementary(f, ctx))
