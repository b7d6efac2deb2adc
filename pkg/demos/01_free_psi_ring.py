# # The free Psi-ring
#
# Polynomials in indexed generators a1, a2, ... with Psi^k(a_j) = a_kj.
# Every Psi^k is a ring map and Psi^i Psi^j = Psi^ij, but the ring is not
# special: Psi^2(a1) and a1^2 differ by something that is not a multiple of 2.

# %%
from psiring import FreePsiRing, NonIntegralDivision, is_special, lambda_structure, parse_poly

R = FreePsiRing("ab")
x = parse_poly("3*a1^2*b2 - a3 + 7")
print("x          =", x)
print("Psi^2(x)   =", R.psi(2, x))
print("Psi^3 Psi^2 = Psi^6:", R.psi(3, R.psi(2, x)) == R.psi(6, x))

# %% [markdown]
# The specialness test looks for Psi^p(r) == r^p mod p and reports the
# first failure it meets.

# %%
w = is_special(FreePsiRing("a"))
print(f"witness: p={w.p}, element={w.element}, Psi^p(r) - r^p = {w.difference}")

# %% [markdown]
# Newton's formula turns the same failure into a division that does not go
# through: lambda^2(a1) would be (a1^2 - a2)/2.

# %%
try:
    lambda_structure(FreePsiRing("a"), parse_poly("a1"), 2)
except NonIntegralDivision as exc:
    print("lambda^2(a1) is not integral:", exc)
