"""Extalg groups of K-theory of spheres and the odd Hopf invariant problem.

For n != n' the Psi-ring extensions of K(S^2n) by K~(S^2n') are classified
by the Hopf invariant h and a class z modulo

    G(n, n') = gcd{ l^n - l^n' : l >= 2 },

and the exponent of a prime p in G is min(min(n, n'), g(p, |n - n'|)),
where g(p, j) is the p-adic valuation of gcd{ k^j - 1 : k >= 2, p does not divide k }.
Both infinite gcds are computed twice: from closed forms and by truncated
brute force, which serves as the oracle in the tests.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .bigpoly import NonIntegralDivision
from .groups import AbelianGroupDescriptor, Congruence

__all__ = [
    "DegenerateSet",
    "GpjExponent",
    "GnProfile",
    "HopfReport",
    "StableRow",
    "is_prime",
    "primes_upto",
    "valuation",
    "gpj_bruteforce",
    "gpj_closed",
    "big_G",
    "big_G_bruteforce",
    "extalg_psi",
    "extalg_lambda",
    "is_admissible_nu2",
    "nu_from_nu2",
    "theorem_case",
    "odd_hopf_feasible",
    "adams_scan",
    "stability_counterexample",
    "stable_extalg",
    "stable_table",
    "format_stable_table",
    "STABLE_HOMOTOPY_REFERENCE",
]

# pi^s_{2k-1} for k = 1..8, for display next to the computed column only.
STABLE_HOMOTOPY_REFERENCE = {
    1: "Z_2",
    2: "Z_24 ⊕ Z_3",
    3: "0",
    4: "Z_240",
    5: "Z_2 ⊕ Z_2 ⊕ Z_2",
    6: "Z_504",
    7: "Z_3",
    8: "Z_480 ⊕ Z_2",
}


class DegenerateSet(ValueError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def primes_upto(n: int) -> list:
    return [p for p in range(2, n + 1) if is_prime(p)]


def valuation(x: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if x == 0:
        raise ValueError("valuation of 0 is infinite")
    x = abs(x)
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def _require_prime(p):
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


@dataclass(frozen=True)
class GpjExponent:
    p: int
    j: int
    value: int


@dataclass(frozen=True)
class GnProfile:
    """G(n, n') with its factorization; value 0 encodes the n = n' branch."""

    n: int
    n_prime: int
    factorization: dict = field(default_factory=dict)
    value: int = 0

    @property
    def per_prime(self) -> bool:
        return self.n == self.n_prime

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "n_prime": self.n_prime,
            "value": self.value,
            "factorization": {str(p): e for p, e in sorted(self.factorization.items())},
            "per_prime": self.per_prime,
        }


def gpj_bruteforce(p: int, j: int, window: int = 16) -> GpjExponent:
    """Valuation at p of the running gcd of k^j - 1 over k >= 2 prime to p.

    Stops once the gcd has stayed unchanged for ``window`` consecutive
    eligible k.
    """
    _require_prime(p)
    if j < 1 or window < 1:
        raise ValueError("j and window must be positive")
    g = 0
    unchanged = 0
    k = 1
    while unchanged < window:
        k += 1
        if k % p == 0:
            continue
        new = gcd(g, k ** j - 1)
        if new == g:
            unchanged += 1
        else:
            g, unchanged = new, 0
    return GpjExponent(p, j, valuation(g, p))


def gpj_closed(p: int, j: int) -> GpjExponent:
    """Closed form of g(p, j).

    p = 2: 1 for odd j, else 2 + v_2(j).
    odd p: 0 unless (p - 1) | j, in which case 1 + v_p(j).
    """
    _require_prime(p)
    if j < 1:
        raise ValueError("j must be positive")
    if p == 2:
        value = 1 if j % 2 else 2 + valuation(j, 2)
    elif j % (p - 1):
        value = 0
    else:
        value = 1 + valuation(j, p)
    return GpjExponent(p, j, value)


def _candidate_primes(d: int) -> list:
    """2 and the odd primes p with (p - 1) | d: the only primes that can divide G."""
    out = [2]
    for t in range(2, d + 1, 2):
        if d % t == 0 and is_prime(t + 1):
            out.append(t + 1)
    return out


def big_G(n: int, n_prime: int) -> GnProfile:
    if n < 1 or n_prime < 1:
        raise ValueError("n and n' must be positive")
    if n == n_prime:
        return GnProfile(n, n_prime, {}, 0)
    m, d = min(n, n_prime), abs(n - n_prime)
    fact = {}
    for p in _candidate_primes(d):
        e = min(m, gpj_closed(p, d).value)
        if e:
            fact[p] = e
    value = 1
    for p, e in fact.items():
        value *= p ** e
    return GnProfile(n, n_prime, fact, value)


def big_G_bruteforce(n: int, n_prime: int, l_max: int = 500) -> int:
    """gcd of |l^n - l^n'| for 2 <= l <= l_max."""
    if n == n_prime:
        raise DegenerateSet("every l^n - l^n' vanishes when n = n'")
    if l_max < 3:
        raise ValueError("l_max must be at least 3")
    g = 0
    for l in range(2, l_max + 1):
        g = gcd(g, l ** n - l ** n_prime)
    return g


# -- Extalg descriptors --------------------------------------------------------

def extalg_psi(n: int, n_prime: int) -> AbelianGroupDescriptor:
    """Extalg_Psi(K(S^2n), K~(S^2n')) in coordinates (h, z)."""
    G = big_G(n, n_prime)
    if G.per_prime:
        return AbelianGroupDescriptor(1, (), True, coordinates=("h", "nu_p"))
    return AbelianGroupDescriptor(1, (G.value,) if G.value > 1 else (), False)


def extalg_lambda(n: int, n_prime: int) -> AbelianGroupDescriptor:
    """Extalg_lambda as the subgroup of the Psi-descriptor cut out by specialness.

    With nu_2 = z (2^n' - 2^n) / G, the condition nu_2 == h (mod 2) becomes
    h == z * (2^n' - 2^n)/G (mod 2).  For odd p the condition nu_p == 0
    (mod p) reads z * (p^n' - p^n)/G == 0 (mod p); it only bites when p^min(n,n')
    divides G, and then forces z == 0 (mod p).
    """
    G = big_G(n, n_prime)
    if G.per_prime:
        return AbelianGroupDescriptor(
            1,
            (),
            True,
            (
                Congruence({"h": 1, "nu_2": 1}, 2),
                Congruence({"nu_p": 1}, "p", note="every prime p > 2"),
            ),
            odd_h_admissible=True,
            coordinates=("h", "nu_p"),
        )
    c2 = (2 ** n_prime - 2 ** n) // G.value
    congruences = [Congruence({"h": 1, "z": 1} if c2 % 2 else {"h": 1}, 2)]
    for p in sorted(G.factorization):
        if p == 2:
            continue
        cp = (p ** n_prime - p ** n) // G.value
        if cp % p:
            congruences.append(Congruence({"z": 1}, p))
    return AbelianGroupDescriptor(
        1, (G.value,), False, tuple(congruences), odd_h_admissible=bool(c2 % 2)
    )


def is_admissible_nu2(n: int, n_prime: int, nu2: int) -> bool:
    """nu_2 gives integral nu_l for every l iff it is a multiple of (2^n' - 2^n)/G."""
    G = big_G(n, n_prime).value
    return nu2 % ((2 ** n_prime - 2 ** n) // G) == 0


def nu_from_nu2(n: int, n_prime: int, nu2: int, l: int) -> int:
    """nu_l = nu_2 (l^n' - l^n) / (2^n' - 2^n), which must be an integer."""
    if n == n_prime:
        raise ValueError("nu_l is unconstrained by nu_2 when n = n'")
    if l < 2:
        raise ValueError("l must be at least 2")
    num = nu2 * (l ** n_prime - l ** n)
    den = 2 ** n_prime - 2 ** n
    if num % den:
        raise NonIntegralDivision(num, den)
    return num // den


# -- odd Hopf invariant --------------------------------------------------------

@dataclass(frozen=True)
class HopfReport:
    n: int
    n_prime: int
    feasible: bool
    reason: str
    theorem_case: int | str
    direction: str = (
        "infeasible rules out odd h (necessary condition); "
        "feasible exhibits odd h via the lambda congruence"
    )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "n_prime": self.n_prime,
            "feasible": self.feasible,
            "reason": self.reason,
            "theorem_case": self.theorem_case,
            "direction": self.direction,
        }


def theorem_case(n: int, n_prime: int) -> int | str:
    """First of the five listed situations that applies, or "none"."""
    if n == n_prime:
        return 1
    if n == 1 or n_prime == 1:
        return 2
    if (n_prime - n) % 2 == 0 and (n == 2 or n_prime == 2):
        return 3
    if n_prime > n >= 3 and (n_prime - n) % 2 ** (n - 2) == 0:
        return 4
    if n > n_prime >= 3 and (n - n_prime) % 2 ** (n_prime - 2) == 0:
        return 5
    return "none"


def odd_hopf_feasible(n: int, n_prime: int) -> HopfReport:
    """Can a lambda-ring extension of K(S^2n) by K~(S^2n') have odd Hopf invariant?"""
    if n < 1 or n_prime < 1:
        raise ValueError("n and n' must be positive")
    case = theorem_case(n, n_prime)
    if n == n_prime:
        return HopfReport(n, n_prime, True, "n = n'", case)
    m, d = min(n, n_prime), abs(n - n_prime)
    g = gpj_closed(2, d).value
    ok = m <= g
    rel = "<=" if ok else ">"
    return HopfReport(n, n_prime, ok, f"min(n, n') = {m} {rel} g(2, {d}) = {g}", case)


def adams_scan(a: int, n_max: int) -> list:
    """All n <= n_max for which (n, a*n) admits odd Hopf invariant."""
    if a < 2:
        raise ValueError("a must be at least 2")
    return [n for n in range(1, n_max + 1) if odd_hopf_feasible(n, a * n).feasible]


# -- stable range ----------------------------------------------------------------

@dataclass(frozen=True)
class StableRow:
    k: int
    torsion: tuple
    free_part: str
    group: AbelianGroupDescriptor

    def to_json(self) -> dict:
        return {"k": self.k, "torsion": list(self.torsion), "free_part": self.free_part}


def stability_counterexample(k_max: int = 8, n_max: int = 20):
    """First (n, k) with k+2 <= n <= n_max where G(n, n+k) != G(n+1, n+k+1), else None."""
    for k in range(1, k_max + 1):
        for n in range(k + 2, n_max + 1):
            if big_G(n, n + k).value != big_G(n + 1, n + k + 1).value:
                return n, k
    return None


def stable_extalg(k: int, n: int | None = None, check_span: int = 8) -> AbelianGroupDescriptor:
    """Extalg_lambda(K(S^2n), K~(S^2(n+k))) for n > k + 1 (default n = k + 2).

    Stability of G is asserted on n = k+2 .. k+2+check_span first.
    """
    if k < 1:
        raise ValueError("k must be positive")
    n = k + 2 if n is None else n
    if n <= k + 1:
        raise ValueError("the stable range needs n > k + 1")
    base = big_G(k + 2, 2 * k + 2).value
    for m in range(k + 3, k + 3 + check_span):
        if big_G(m, m + k).value != base:
            raise AssertionError(f"G(n, n+{k}) is not stable at n = {m}")
    return extalg_lambda(n, n + k)


def stable_table(k_max: int = 8) -> list:
    rows = []
    for k in range(1, k_max + 1):
        group = stable_extalg(k)
        free = "2Z" if group.forces_even("h") else "Z"
        rows.append(StableRow(k, group.torsion, free, group))
    return rows


def format_stable_table(rows) -> str:
    head = ("k", "Extalg^s_2k", "pi^s_2k-1 (reference)")
    body = []
    for r in rows:
        group = " ⊕ ".join([r.free_part] + [f"Z_{t}" for t in r.torsion])
        body.append((str(r.k), group, STABLE_HOMOTOPY_REFERENCE.get(r.k, "")))
    widths = [max(len(x[i]) for x in [head] + body) for i in range(3)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in [head] + body]
    return "\n".join(lines)
