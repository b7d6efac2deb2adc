"""Concrete Psi-rings, lambda-structures, modules and derivation checkers.

Two kinds of rings live here:

* ``FreePsiRing`` -- polynomials in indexed generators a1, a2, ... with
  Psi^k(a_j) = a_{kj}.  Elements are ``MultiPoly`` values.
* ``FiniteRankRing`` -- rings that are free abelian of finite rank with a
  multiplication table and Psi^k given by integer matrices.  The integers,
  the dual numbers K(S^2n) and the extension rings of the lab are of this
  kind.  Elements are ``RingElement`` coordinate vectors.

Verifiers return ``None`` when every tested instance passes and a
``Witness`` / ``CounterExample`` describing the first failure otherwise.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from . import _linalg as la
from .bigpoly import MultiPoly, NonIntegralDivision, Var
from .symmetric import OperationSequence, lambda_sequence

__all__ = [
    "AlphabetClash",
    "Witness",
    "CounterExample",
    "FreePsiRing",
    "FiniteRankRing",
    "RingElement",
    "IntegerPsiRing",
    "SphereKRing",
    "psi_apply",
    "tensor_psi",
    "is_special",
    "lambda_structure",
    "PsiModuleSpec",
    "LambdaModuleSpec",
    "DerivationCandidate",
    "regular_module",
    "sphere_reduced_module",
    "twisted_module",
    "check_psi_derivation",
    "check_lambda_derivation",
    "DEFAULT_PRIMES",
]

DEFAULT_PRIMES = (2, 3, 5, 7, 11, 13)


class AlphabetClash(ValueError):
    pass


@dataclass(frozen=True)
class Witness:
    """An element r and prime p with Psi^p(r) - r^p not divisible by p."""

    p: int
    element: object
    difference: object = None

    def to_json(self) -> dict:
        return {"p": self.p, "element": str(self.element), "difference": str(self.difference)}


@dataclass(frozen=True)
class CounterExample:
    """A failed axiom instance; ``where`` names the inputs, ``lhs``/``rhs`` the two sides."""

    axiom: str
    where: tuple
    lhs: object = None
    rhs: object = None

    def to_json(self) -> dict:
        return {
            "axiom": self.axiom,
            "where": [str(w) for w in self.where],
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
        }


# -- the free Psi-ring -------------------------------------------------------

class FreePsiRing:
    """Free Psi-ring on the generator families in ``alphabet``."""

    def __init__(self, alphabet: Iterable[str] = "a"):
        self.alphabet = frozenset(alphabet)
        if not self.alphabet:
            raise ValueError("alphabet must be nonempty")
        for fam in self.alphabet:
            Var(fam, 1)  # validates the family name

    def __repr__(self):
        return f"FreePsiRing({''.join(sorted(self.alphabet))!r})"

    def __eq__(self, other):
        return isinstance(other, FreePsiRing) and self.alphabet == other.alphabet

    def __hash__(self):
        return hash(self.alphabet)

    def gen(self, family: str, index: int = 1) -> MultiPoly:
        if family not in self.alphabet:
            raise ValueError(f"{family!r} is not in the alphabet of {self!r}")
        return MultiPoly.var(family, index)

    def generators(self) -> list:
        return [MultiPoly.var(f, 1) for f in sorted(self.alphabet)]

    @property
    def one(self) -> MultiPoly:
        return MultiPoly.const(1)

    def element(self, x) -> MultiPoly:
        x = MultiPoly.coerce(x)
        stray = x.families() - self.alphabet
        if stray:
            raise ValueError(f"families {sorted(stray)} are not in the alphabet")
        return x

    def psi(self, k: int, x) -> MultiPoly:
        if k < 1:
            raise ValueError("Adams operations are indexed by k >= 1")
        x = self.element(x)
        if k == 1:
            return x
        return x.map_vars(lambda v: Var(v[0], k * v[1]))

    def is_zero_mod(self, x: MultiPoly, p: int) -> bool:
        return x.mod(p).is_zero()

    def coproduct(self, other: "FreePsiRing") -> "FreePsiRing":
        clash = self.alphabet & other.alphabet
        if clash:
            raise AlphabetClash(f"shared generator families {sorted(clash)}")
        return FreePsiRing(self.alphabet | other.alphabet)


def psi_apply(k: int, elem, ring: FreePsiRing | None = None) -> MultiPoly:
    """Psi^k on the free Psi-ring: a_j -> a_{kj}, extended multiplicatively."""
    elem = MultiPoly.coerce(elem)
    ring = ring or FreePsiRing(elem.families() or "a")
    return ring.psi(k, elem)


def tensor_psi(R: FreePsiRing, r, S: FreePsiRing, s):
    """The element r (x) s of the coproduct R (x) S, together with that ring.

    Because the alphabets are disjoint, R (x) S is the free Psi-ring on the
    union and r (x) s is the product r*s.
    """
    ring = R.coproduct(S)
    return ring, R.element(r) * S.element(s)


# -- finite-rank rings -------------------------------------------------------

class FiniteRankRing:
    """Commutative ring, free of rank d over Z, with matrix Adams operations.

    ``table[(i, j)]`` is the coordinate vector of basis_i * basis_j (only
    i <= j needs to be given; missing entries are zero).  ``psi_matrix(k)``
    must return the d x d matrix whose columns are the images of the basis.
    """

    def __init__(self, basis: Sequence[str], table: dict, unit: Sequence[int]):
        self.basis = tuple(basis)
        self.rank = len(self.basis)
        zero = (0,) * self.rank
        self._table = {}
        for i in range(self.rank):
            for j in range(self.rank):
                self._table[i, j] = tuple(table.get((i, j), table.get((j, i), zero)))
        self._unit = tuple(unit)

    def psi_matrix(self, k: int):
        raise NotImplementedError

    # -- elements --
    def element(self, *coords) -> "RingElement":
        if len(coords) == 1 and isinstance(coords[0], RingElement):
            if coords[0].ring is not self:
                raise ValueError("element belongs to another ring")
            return coords[0]
        if len(coords) == 1 and isinstance(coords[0], int) and self.rank > 1:
            return self.one * coords[0]
        if len(coords) == 1 and isinstance(coords[0], (tuple, list)):
            coords = tuple(coords[0])
        if len(coords) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates")
        return RingElement(self, tuple(int(c) for c in coords))

    @property
    def one(self) -> "RingElement":
        return RingElement(self, self._unit)

    @property
    def zero(self) -> "RingElement":
        return RingElement(self, (0,) * self.rank)

    def basis_element(self, i: int) -> "RingElement":
        return RingElement(self, tuple(int(j == i) for j in range(self.rank)))

    def generators(self) -> list:
        return [self.basis_element(i) for i in range(self.rank)]

    def mul_coords(self, u, v):
        out = [0] * self.rank
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                for t, c in enumerate(self._table[i, j]):
                    out[t] += a * b * c
        return tuple(out)

    def psi(self, k: int, x) -> "RingElement":
        if k < 1:
            raise ValueError("Adams operations are indexed by k >= 1")
        x = self.element(x)
        return RingElement(self, la.matvec(self.psi_matrix(k), x.coords))

    def is_zero_mod(self, x: "RingElement", p: int) -> bool:
        return all(c % p == 0 for c in x.coords)


class RingElement:
    __slots__ = ("ring", "coords")

    def __init__(self, ring: FiniteRankRing, coords: tuple):
        self.ring = ring
        self.coords = coords

    def _other(self, other):
        if isinstance(other, RingElement):
            if other.ring is not self.ring:
                raise ValueError("elements of different rings")
            return other
        if isinstance(other, int):
            return self.ring.one * other
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return RingElement(self.ring, tuple(-a for a in self.coords))

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return RingElement(self.ring, tuple(a * other for a in self.coords))
        other = self._other(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, self.ring.mul_coords(self.coords, other.coords))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = self.ring.one
        for _ in range(k):
            out = out * self
        return out

    def divide_exact(self, k: int) -> "RingElement":
        if any(c % k for c in self.coords):
            raise NonIntegralDivision(self, k)
        return RingElement(self.ring, tuple(c // k for c in self.coords))

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.one * other
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ring is other.ring and self.coords == other.coords

    def __hash__(self):
        return hash((id(self.ring), self.coords))

    def __str__(self):
        parts = []
        for c, name in zip(self.coords, self.ring.basis):
            if not c:
                continue
            if name == "1":
                body = str(abs(c))
            else:
                body = name if abs(c) == 1 else f"{abs(c)}*{name}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        if not parts:
            return "0"
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return head + "".join(f" {s} {b}" for s, b in parts[1:])

    def __repr__(self):
        return f"<{self} in {self.ring!r}>"


class IntegerPsiRing(FiniteRankRing):
    """Z with Psi^k = id; its lambda-operations are binomial coefficients."""

    def __init__(self):
        super().__init__(("1",), {(0, 0): (1,)}, (1,))

    def psi_matrix(self, k: int):
        return ((1,),)

    def __repr__(self):
        return "IntegerPsiRing()"


class SphereKRing(FiniteRankRing):
    """K(S^2n): dual numbers u + b*y with y^2 = 0 and Psi^k(y) = k^n y."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be a positive integer")
        self.n = n
        super().__init__(("1", "y"), {(0, 0): (1, 0), (0, 1): (0, 1), (1, 1): (0, 0)}, (1, 0))

    @property
    def y(self) -> RingElement:
        return self.basis_element(1)

    def psi_matrix(self, k: int):
        return ((1, 0), (0, k ** self.n))

    def __repr__(self):
        return f"SphereKRing({self.n})"


def default_samples(ring) -> list:
    gens = ring.generators()
    prods = [u * v for u, v in itertools.combinations_with_replacement(gens, 2)]
    return gens + prods


def is_special(ring, primes: Iterable[int] = DEFAULT_PRIMES, samples: Iterable | None = None):
    """Check Psi^p(r) == r^p mod p on samples; return the first Witness or None.

    Generators and their pairwise products are always tested; ``samples``
    adds more elements.
    """
    tested = default_samples(ring)
    if samples is not None:
        tested += [ring.element(s) for s in samples]
    for p in primes:
        for r in tested:
            diff = ring.psi(p, r) - r ** p
            if not ring.is_zero_mod(diff, p):
                return Witness(p, r, diff)
    return None


def lambda_structure(ring, elem, i: int):
    """lambda^i(elem) from the Adams operations via Newton's formula.

    Raises NonIntegralDivision when some step does not divide exactly,
    which certifies that the Psi-structure is not special.
    """
    return lambda_values(ring, ring.element(elem), i)[i - 1]


def lambda_values(ring, elem, i: int) -> list:
    """[lambda^1(elem), ..., lambda^i(elem)]."""
    psis = OperationSequence([ring.psi(k, elem) for k in range(1, i + 1)], "psi")
    return lambda_sequence(psis, i)


# -- modules -----------------------------------------------------------------

@dataclass(frozen=True)
class PsiModuleSpec:
    """A Psi-module Z^rank over a finite-rank ring.

    ``action[i]`` is the matrix by which the i-th ring basis element acts
    and ``psi(k)`` is the matrix of psi^k.
    """

    ring: FiniteRankRing
    rank: int
    action: tuple
    psi: Callable[[int], tuple]

    def act(self, r, v) -> tuple:
        r = self.ring.element(r)
        return la.matvec(self.action_matrix(r), v)

    def action_matrix(self, r):
        r = self.ring.element(r)
        return la.combine(r.coords, self.action, self.rank, self.rank)

    def validate(self, bound: int = 36):
        return _validate_module(self, self.psi, bound, sign_law=False)


@dataclass(frozen=True)
class LambdaModuleSpec:
    """A lambda-module: like PsiModuleSpec but with operators Lambda^i."""

    ring: FiniteRankRing
    rank: int
    action: tuple
    Lambda: Callable[[int], tuple]

    act = PsiModuleSpec.act
    action_matrix = PsiModuleSpec.action_matrix

    def validate(self, bound: int = 36):
        return _validate_module(self, self.Lambda, bound, sign_law=True)


def _validate_module(M, op, bound, sign_law):
    R = M.ring
    n = M.rank
    ident = la.identity(n)
    if M.action_matrix(R.one) != ident:
        return CounterExample("unit acts as identity", ("1",), M.action_matrix(R.one), ident)
    gens = R.generators()
    for u, v in itertools.product(gens, repeat=2):
        lhs = M.action_matrix(u * v)
        rhs = la.matmul(M.action_matrix(u), M.action_matrix(v))
        if lhs != rhs:
            return CounterExample("(uv)m = u(vm)", (u, v), lhs, rhs)
    if op(1) != ident:
        return CounterExample("operator 1 is the identity", (1,), op(1), ident)
    for i in range(1, bound + 1):
        for r in gens:
            lhs = la.matmul(op(i), M.action_matrix(r))
            rhs = la.matmul(M.action_matrix(R.psi(i, r)), op(i))
            if lhs != rhs:
                return CounterExample("op^i(rm) = Psi^i(r) op^i(m)", (i, r), lhs, rhs)
    for i in range(1, bound + 1):
        for j in range(1, bound // i + 1):
            lhs = op(i * j)
            rhs = la.matmul(op(i), op(j))
            if sign_law:
                rhs = la.scale((-1) ** ((i + 1) * (j + 1)), rhs)
            if lhs != rhs:
                return CounterExample("composition law", (i, j), lhs, rhs)
    return None


def regular_module(ring: FiniteRankRing) -> PsiModuleSpec:
    """R as a Psi-module over itself, with psi = Psi."""
    cols = []
    for i in range(ring.rank):
        e = ring.basis_element(i)
        images = [(e * ring.basis_element(j)).coords for j in range(ring.rank)]
        cols.append(tuple(zip(*images)))
    return PsiModuleSpec(ring, ring.rank, tuple(cols), ring.psi_matrix)


def sphere_reduced_module(n: int, n_prime: int, kind: str = "psi"):
    """K~(S^2n') = Z*z over K(S^2n): y acts by zero, psi^k(z) = k^n' z.

    With ``kind="lambda"`` the operators are Lambda^k(z) = (-1)^(k-1) k^(n'-1) z,
    the lambda-operations of a square-zero element with those Adams operations.
    """
    R = SphereKRing(n)
    action = (((1,),), ((0,),))
    if kind == "psi":
        return PsiModuleSpec(R, 1, action, lambda k: ((k ** n_prime,),))
    if kind == "lambda":
        return LambdaModuleSpec(
            R, 1, action, lambda k: (((-1) ** (k - 1) * k ** (n_prime - 1),),)
        )
    raise ValueError("kind must be 'psi' or 'lambda'")


def twisted_module(M, f: int):
    """M^f: the same group with r acting through Psi^f(r)."""
    if f < 1:
        raise ValueError("f must be positive")
    R = M.ring
    action = tuple(M.action_matrix(R.psi(f, e)) for e in R.generators())
    if isinstance(M, LambdaModuleSpec):
        twisted = LambdaModuleSpec(R, M.rank, action, M.Lambda)
    else:
        twisted = PsiModuleSpec(R, M.rank, action, M.psi)
    one = twisted.action_matrix(R.one)
    if one != la.identity(M.rank):
        raise ValueError("twisted action does not fix the unit")
    for u, v in itertools.product(R.generators(), repeat=2):
        if twisted.action_matrix(u * v) != la.matmul(twisted.action_matrix(u), twisted.action_matrix(v)):
            raise ValueError(f"twisted action is not associative on ({u}, {v})")
    return twisted


# -- derivations -------------------------------------------------------------

@dataclass(frozen=True)
class DerivationCandidate:
    """Additive map d: R -> M given by its values on the ring basis."""

    values: tuple = field(default=())

    def __call__(self, r) -> tuple:
        return tuple(
            sum(c * v[t] for c, v in zip(r.coords, self.values)) for t in range(len(self.values[0]))
        )

    @classmethod
    def zero(cls, R: FiniteRankRing, M) -> "DerivationCandidate":
        return cls(tuple((0,) * M.rank for _ in range(R.rank)))


def _vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _check_leibniz(d, M):
    R = M.ring
    for u, v in itertools.combinations_with_replacement(R.generators(), 2):
        lhs = d(u * v)
        rhs = _vadd(M.act(u, d(v)), M.act(v, d(u)))
        if lhs != rhs:
            return CounterExample("d(rs) = r d(s) + d(r) s", (u, v), lhs, rhs)
    return None


def check_psi_derivation(d: DerivationCandidate, M: PsiModuleSpec, bound: int = 12):
    """Leibniz rule and psi^i(d(r)) = d(Psi^i(r)) on generators and their products."""
    R = M.ring
    if len(d.values) != R.rank:
        raise ValueError("derivation must give one value per ring basis element")
    bad = _check_leibniz(d, M)
    if bad:
        return bad
    samples = default_samples(R)
    for i in range(1, bound + 1):
        for r in samples:
            lhs = la.matvec(M.psi(i), d(r))
            rhs = d(R.psi(i, r))
            if lhs != rhs:
                return CounterExample("psi^i(d(r)) = d(Psi^i(r))", (i, r), lhs, rhs)
    return None


def check_lambda_derivation(d: DerivationCandidate, M: LambdaModuleSpec, bound: int = 4):
    """Leibniz rule and the lambda-derivation identity

    d(lambda^i r) = Lambda^i(d r) + sum_{j=1}^{i-1} Lambda^j(d r) lambda^(i-j)(r)

    on generators, their pairwise products and pairwise sums.
    """
    R = M.ring
    if len(d.values) != R.rank:
        raise ValueError("derivation must give one value per ring basis element")
    bad = _check_leibniz(d, M)
    if bad:
        return bad
    gens = R.generators()
    samples = default_samples(R) + [u + v for u, v in itertools.combinations(gens, 2)]
    for r in samples:
        lam = lambda_values(R, r, bound)
        dr = d(r)
        for i in range(1, bound + 1):
            lhs = d(lam[i - 1])
            rhs = la.matvec(M.Lambda(i), dr)
            for j in range(1, i):
                rhs = _vadd(rhs, M.act(lam[i - j - 1], la.matvec(M.Lambda(j), dr)))
            if lhs != rhs:
                return CounterExample("d(lambda^i r) = Lambda^i(dr) + ...", (i, r), lhs, rhs)
    return None
