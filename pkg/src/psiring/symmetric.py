"""Symmetric functions, universal lambda-ring polynomials and Newton's formula.

The universal polynomials are expressed in lambda-symbols: ``r_k`` stands
for lambda^k(r) and ``s_k`` for lambda^k(s).  They are obtained by the
splitting principle: write r and s through formal roots, expand the
relevant elementary symmetric function of products of roots and rewrite
the result in the elementary basis.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from importlib import resources
from itertools import combinations
from typing import Sequence

from .bigpoly import MultiPoly, NonIntegralDivision, Var, parse_poly, format_poly

__all__ = [
    "NotSymmetric",
    "SymmetricContext",
    "OperationSequence",
    "elementary",
    "elementary_of",
    "express_in_elementary",
    "universal_P",
    "universal_Pij",
    "compute_universal_P",
    "compute_universal_Pij",
    "newton_psi_from_lambda",
    "newton_lambda_from_psi",
    "lambda_sequence",
    "psi_sequence",
    "MAX_WEIGHT",
]

# Products i*j above this are refused unless the caller raises the cap.
MAX_WEIGHT = 12


class NotSymmetric(ValueError):
    def __init__(self, family: str, position: int):
        super().__init__(
            f"polynomial is not symmetric under {family}{position} <-> {family}{position + 1}"
        )
        self.transposition = (Var(family, position), Var(family, position + 1))


@dataclass(frozen=True)
class SymmetricContext:
    """Sets of formal roots and the names of their elementary symbols.

    ``roots`` pairs a root family with its size, e.g. ``(("x", 2),)`` for
    x1, x2.  ``targets`` names the family that receives e_1..e_d of each
    root set, in the same order.
    """

    roots: tuple = (("x", 2),)
    targets: tuple = ("e",)

    def __post_init__(self):
        if len(self.roots) != len(self.targets):
            raise ValueError("one target family per root set")
        for fam, d in self.roots:
            if d < 1:
                raise ValueError("root sets need at least one root")
        fams = [f for f, _ in self.roots] + list(self.targets)
        if len(set(fams)) != len(fams):
            raise ValueError("root and target families must be distinct")


@dataclass(frozen=True)
class OperationSequence:
    """Values v_1..v_k of lambda^i(r) (kind ``"lambda"``) or Psi^i(r) (``"psi"``)."""

    values: tuple
    kind: str

    def __post_init__(self):
        if self.kind not in ("lambda", "psi"):
            raise ValueError("kind must be 'lambda' or 'psi'")
        object.__setattr__(self, "values", tuple(self.values))

    def __getitem__(self, i: int):
        # 1-based, matching the operation index
        return self.values[i - 1]

    def __len__(self):
        return len(self.values)


@functools.lru_cache(maxsize=None)
def elementary(family: str, d: int, k: int) -> MultiPoly:
    """e_k(family1, ..., family_d)."""
    if k == 0:
        return MultiPoly.const(1)
    if k > d:
        return MultiPoly()
    return MultiPoly(
        {tuple((Var(family, i), 1) for i in idx): 1 for idx in combinations(range(1, d + 1), k)}
    )


def elementary_of(items: Sequence[MultiPoly], k: int) -> MultiPoly:
    """k-th elementary symmetric function of arbitrary ring elements.

    Uses the truncated generating function prod(1 + item*t) up to t^k.
    """
    coeffs = [MultiPoly.const(1)] + [MultiPoly()] * k
    for item in items:
        for j in range(k, 0, -1):
            coeffs[j] = coeffs[j] + coeffs[j - 1] * item
    return coeffs[k]


def _check_symmetric(f: MultiPoly, ctx: SymmetricContext) -> None:
    for fam, d in ctx.roots:
        for pos in range(1, d):
            a, b = Var(fam, pos), Var(fam, pos + 1)
            swapped = f.map_vars(lambda v: b if v == a else a if v == b else v)
            if swapped != f:
                raise NotSymmetric(fam, pos)


def express_in_elementary(f: MultiPoly, ctx: SymmetricContext | None = None) -> MultiPoly:
    """Rewrite a (multi)symmetric polynomial in elementary symbols.

    Classical leading-term subtraction: the graded-lex leading monomial of a
    symmetric polynomial has nonincreasing exponents along each root set,
    so it is the leading monomial of a unique product of e_k's.  Variables
    outside the root sets ride along as coefficients.
    """
    ctx = ctx or SymmetricContext()
    _check_symmetric(f, ctx)
    root_of = {}
    for slot, (fam, d) in enumerate(ctx.roots):
        root_of[fam] = slot
        for var in f.variables():
            if var[0] == fam and var[1] > d:
                raise ValueError(f"variable {var} outside root set {fam}1..{fam}{d}")

    result: dict = {}
    remainder = f
    while remainder:
        mono, coeff = remainder.leading_term()
        exps = [[0] * (d + 1) for _, d in ctx.roots]  # extra slot for the e_d step
        extra = []
        for v, e in mono:
            slot = root_of.get(v[0])
            if slot is None:
                extra.append((v, e))
            else:
                exps[slot][v[1] - 1] = e
        product = MultiPoly.from_monomial(dict(extra), coeff)
        target_mono = dict(extra)
        for slot, ((fam, d), tgt) in enumerate(zip(ctx.roots, ctx.targets)):
            ex = exps[slot]
            for k in range(1, d + 1):
                power = ex[k - 1] - ex[k]
                if power < 0:
                    raise AssertionError("leading exponent is not a partition")
                if power:
                    product = product * elementary(fam, d, k) ** power
                    target_mono[Var(tgt, k)] = power
        key = tuple(sorted(target_mono.items()))
        result[key] = result.get(key, 0) + coeff
        remainder = remainder - product
    return MultiPoly(result)


def compute_universal_P(i: int) -> MultiPoly:
    """P_i from formal roots x1..xi, y1..yi (no cache)."""
    if i < 1:
        raise ValueError("i must be positive")
    xs = [MultiPoly.var("x", a) for a in range(1, i + 1)]
    ys = [MultiPoly.var("y", b) for b in range(1, i + 1)]
    f = elementary_of([x * y for x in xs for y in ys], i)
    ctx = SymmetricContext(roots=(("x", i), ("y", i)), targets=("r", "s"))
    return express_in_elementary(f, ctx)


def compute_universal_Pij(i: int, j: int, max_weight: int = MAX_WEIGHT) -> MultiPoly:
    """P_{i,j} from ij formal roots (no cache)."""
    if i < 1 or j < 1:
        raise ValueError("i and j must be positive")
    d = i * j
    if d > max_weight:
        raise ValueError(f"i*j = {d} exceeds the cap {max_weight}")
    xs = [MultiPoly.var("x", a) for a in range(1, d + 1)]
    prods = []
    for subset in combinations(xs, j):
        m = MultiPoly.const(1)
        for x in subset:
            m = m * x
        prods.append(m)
    f = elementary_of(prods, i)
    return express_in_elementary(f, SymmetricContext(roots=(("x", d),), targets=("r",)))


def _golden(name: str) -> MultiPoly | None:
    try:
        text = resources.files("psiring.data").joinpath(name).read_text()
    except (FileNotFoundError, ModuleNotFoundError):
        return None
    return parse_poly(text.strip())


@functools.lru_cache(maxsize=None)
def universal_P(i: int) -> MultiPoly:
    """lambda^i(rs) as a polynomial in r_k = lambda^k(r), s_k = lambda^k(s)."""
    cached = _golden(f"P_{i}.txt")
    return cached if cached is not None else compute_universal_P(i)


@functools.lru_cache(maxsize=None)
def universal_Pij(i: int, j: int, max_weight: int = MAX_WEIGHT) -> MultiPoly:
    """lambda^i(lambda^j(r)) as a polynomial in r_1..r_{ij}."""
    if j == 1 or i == 1:
        # lambda^1 is the identity on either side
        return MultiPoly.var("r", i * j)
    cached = _golden(f"P_{i}_{j}.txt")
    return cached if cached is not None else compute_universal_Pij(i, j, max_weight)


def write_golden(directory, max_i: int = 4, pairs=((2, 2), (2, 3), (3, 2))) -> None:
    """Regenerate the golden files from the formal-root computation."""
    from pathlib import Path

    directory = Path(directory)
    for i in range(1, max_i + 1):
        (directory / f"P_{i}.txt").write_text(format_poly(compute_universal_P(i)) + "\n")
    for i, j in pairs:
        (directory / f"P_{i}_{j}.txt").write_text(format_poly(compute_universal_Pij(i, j)) + "\n")


# -- Newton's formula --------------------------------------------------------

def _divide(x, k: int):
    if isinstance(x, int):
        if x % k:
            raise NonIntegralDivision(x, k)
        return x // k
    return x.divide_exact(k)


def newton_psi_from_lambda(seq: OperationSequence, i: int):
    """Psi^i from lambda^1..lambda^i.

    Psi^i = sum_{j=1}^{i-1} (-1)^(j-1) lambda^j Psi^(i-j) + (-1)^(i-1) i lambda^i.
    Only ring operations are used, so this never fails.
    """
    return psi_sequence(seq, i)[i - 1]


def psi_sequence(seq: OperationSequence, i: int) -> list:
    if seq.kind != "lambda":
        raise ValueError("expected a lambda sequence")
    if i < 1 or len(seq) < i:
        raise ValueError(f"need lambda^1..lambda^{i}")
    lam = seq.values
    psi = []
    for t in range(1, i + 1):
        acc = lam[t - 1] * (t if t % 2 else -t)
        for j in range(1, t):
            term = lam[j - 1] * psi[t - j - 1]
            acc = acc + term if j % 2 else acc - term
        psi.append(acc)
    return psi


def newton_lambda_from_psi(seq: OperationSequence, i: int):
    """lambda^i from Psi^1..Psi^i, dividing exactly by i at each step.

    lambda^i = (-1)^(i-1)/i * (Psi^i - lambda^1 Psi^(i-1) + ... + (-1)^(i-1) lambda^(i-1) Psi^1).
    A remainder raises NonIntegralDivision carrying the undivided sum, which
    certifies that the Psi-structure is not special.
    """
    return lambda_sequence(seq, i)[i - 1]


def lambda_sequence(seq: OperationSequence, i: int) -> list:
    if seq.kind != "psi":
        raise ValueError("expected a psi sequence")
    if i < 1 or len(seq) < i:
        raise ValueError(f"need Psi^1..Psi^{i}")
    psi = seq.values
    lam = []
    for t in range(1, i + 1):
        acc = psi[t - 1]
        for j in range(1, t):
            term = lam[j - 1] * psi[t - j - 1]
            acc = acc - term if j % 2 else acc + term
        q = _divide(acc, t)
        lam.append(q if t % 2 else -q)
    return lam
