"""Square-zero extensions of the dual numbers as explicit integer models.

An extension ring X has Z-basis (gamma, beta, alpha): gamma is the unit,
beta lifts y, alpha spans the ideal M.  Multiplication is beta^2 = h*alpha
and every other product involving alpha or beta vanishes.  The Adams
operations are the matrices

    gamma -> gamma,  beta -> k^n beta + nu_k alpha,  alpha -> k^n' alpha.

Every claim about these extensions becomes a finite matrix identity that
the verifiers below check directly.
"""
from __future__ import annotations

import itertools
from typing import Iterable

from . import _linalg as la
from .bigpoly import NonIntegralDivision
from .rings import CounterExample, FiniteRankRing, Witness, is_special
from .spheres import big_G, nu_from_nu2, primes_upto

__all__ = [
    "ExtensionModel",
    "verify_commutation",
    "nu_relation_holds",
    "verify_ring_homomorphism",
    "verify_special",
    "special_congruences_hold",
    "class_label",
    "equivalence_reduce",
    "equivalent",
    "enumerate_classes",
    "lab_report",
]

BASIS = ("gamma", "beta", "alpha")


class ExtensionModel(FiniteRankRing):
    """X = Z gamma + Z beta + Z alpha with the data (n, n', h, nu_k)."""

    def __init__(self, n: int, n_prime: int, h: int, nu: dict):
        if n < 1 or n_prime < 1:
            raise ValueError("n and n' must be positive")
        self.n = n
        self.n_prime = n_prime
        self.h = h
        self.nu = {int(k): int(v) for k, v in nu.items()}
        if any(k < 2 for k in self.nu):
            raise ValueError("nu_k is only specified for k >= 2")
        table = {
            (0, 0): (1, 0, 0),
            (0, 1): (0, 1, 0),
            (0, 2): (0, 0, 1),
            (1, 1): (0, 0, h),
        }
        super().__init__(BASIS, table, (1, 0, 0))
        self._psi_cache = {}

    @classmethod
    def from_nu2(cls, n: int, n_prime: int, h: int, nu2: int, k_max: int = 12) -> "ExtensionModel":
        """Fill nu_3..nu_kmax from nu_2; raises NonIntegralDivision if nu_2 is not admissible."""
        nu = {l: nu_from_nu2(n, n_prime, nu2, l) for l in range(2, k_max + 1)}
        return cls(n, n_prime, h, nu)

    @property
    def k_max(self) -> int:
        return max(self.nu, default=1)

    def psi_matrix(self, k: int):
        if k in self._psi_cache:
            return self._psi_cache[k]
        if k == 1:
            nu_k = 0
        elif k in self.nu:
            nu_k = self.nu[k]
        else:
            raise ValueError(f"nu_{k} is not specified by this model")
        mat = ((1, 0, 0), (0, k ** self.n, 0), (0, nu_k, k ** self.n_prime))
        self._psi_cache[k] = mat
        return mat

    def with_move(self, N: int) -> "ExtensionModel":
        """Change of lift beta -> beta + N alpha: nu_k -> nu_k + N (k^n' - k^n)."""
        nu = {k: v + N * (k ** self.n_prime - k ** self.n) for k, v in self.nu.items()}
        return ExtensionModel(self.n, self.n_prime, self.h, nu)

    def __eq__(self, other):
        if not isinstance(other, ExtensionModel):
            return NotImplemented
        return (self.n, self.n_prime, self.h, self.nu) == (other.n, other.n_prime, other.h, other.nu)

    def __hash__(self):
        return hash((self.n, self.n_prime, self.h, tuple(sorted(self.nu.items()))))

    def __repr__(self):
        return f"ExtensionModel(n={self.n}, n_prime={self.n_prime}, h={self.h}, nu={self.nu})"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "n_prime": self.n_prime,
            "h": self.h,
            "nu": {str(k): v for k, v in sorted(self.nu.items())},
        }

    @classmethod
    def from_json(cls, data: dict) -> "ExtensionModel":
        n_prime = data["n_prime"] if "n_prime" in data else data["n'"]
        return cls(data["n"], n_prime, data["h"], {int(k): v for k, v in data["nu"].items()})


def _bound(model, k_max):
    return model.k_max if k_max is None else min(k_max, model.k_max)


def verify_commutation(model: ExtensionModel, k_max: int | None = None):
    """Psi^k Psi^l = Psi^l Psi^k for 2 <= k <= l <= k_max, and = Psi^kl when nu_kl is known."""
    K = _bound(model, k_max)
    for k in range(2, K + 1):
        for l in range(k, K + 1):
            kl = la.matmul(model.psi_matrix(k), model.psi_matrix(l))
            lk = la.matmul(model.psi_matrix(l), model.psi_matrix(k))
            if kl != lk:
                return CounterExample("Psi^k Psi^l = Psi^l Psi^k", (k, l), kl, lk)
            if k * l <= model.k_max:
                target = model.psi_matrix(k * l)
                if kl != target:
                    return CounterExample("Psi^k Psi^l = Psi^kl", (k, l), kl, target)
    return None


def nu_relation_holds(model: ExtensionModel, k_max: int | None = None) -> bool:
    """nu_l (k^n' - k^n) == nu_k (l^n' - l^n) for all 2 <= k, l <= k_max."""
    K = _bound(model, k_max)
    n, m = model.n, model.n_prime
    return all(
        model.nu[l] * (k ** m - k ** n) == model.nu[k] * (l ** m - l ** n)
        for k in range(2, K + 1)
        for l in range(2, K + 1)
    )


def verify_ring_homomorphism(model: ExtensionModel, k_max: int | None = None):
    """Psi^k(uv) = Psi^k(u) Psi^k(v) on basis pairs and Psi^k(1) = 1.

    On (beta, beta) this demands h k^n' = h k^2n.
    """
    K = _bound(model, k_max)
    gens = model.generators()
    for k in range(1, K + 1):
        if model.psi(k, model.one) != model.one:
            return CounterExample("Psi^k(1) = 1", (k, "gamma"), model.psi(k, model.one), model.one)
        images = [model.psi(k, u) for u in gens]
        for (i, u), (j, v) in itertools.combinations_with_replacement(enumerate(gens), 2):
            lhs = model.psi(k, u * v)
            rhs = images[i] * images[j]
            if lhs != rhs:
                return CounterExample("Psi^k(uv) = Psi^k(u) Psi^k(v)", (k, BASIS[i], BASIS[j]), lhs, rhs)
    return None


def _combination_samples(model):
    out = []
    for coords in itertools.product((0, 1), repeat=3):
        if sum(coords) > 1:
            out.append(model.element(coords))
    return out


def verify_special(model: ExtensionModel, primes: Iterable[int] = (2, 3, 5, 7)) -> Witness | None:
    """Psi^p(x) == x^p mod p on basis elements, their products and 0/1 combinations."""
    primes = list(primes)
    missing = [p for p in primes if p not in model.nu]
    if missing:
        raise ValueError(f"model does not specify nu_p for p in {missing}")
    return is_special(model, primes, _combination_samples(model))


def special_congruences_hold(model: ExtensionModel, primes: Iterable[int] = (2, 3, 5, 7)) -> bool:
    """nu_2 == h (mod 2) and nu_p == 0 (mod p) for the odd primes tested."""
    for p in primes:
        if p not in model.nu:
            continue
        target = model.h if p == 2 else 0
        if (model.nu[p] - target) % p:
            return False
    return True


def _period_data(model):
    if model.n == model.n_prime:
        raise ValueError("equivalence classes are parametrised by z only when n != n'")
    if 2 not in model.nu:
        raise ValueError("model must specify nu_2")
    D = 2 ** model.n_prime - 2 ** model.n
    G = big_G(model.n, model.n_prime).value
    step = D // G
    if model.nu[2] % step:
        raise NonIntegralDivision(model.nu[2], step)
    return D, G, model.nu[2] // step


def class_label(model: ExtensionModel) -> tuple:
    _, G, z = _period_data(model)
    return model.h, z % G


def equivalence_reduce(model: ExtensionModel):
    """Move z = nu_2 G / (2^n' - 2^n) into [0, G); return (model, (h, z mod G))."""
    _, G, z = _period_data(model)
    canonical = model.with_move(-(z // G))
    return canonical, (model.h, z % G)


def equivalent(a: ExtensionModel, b: ExtensionModel) -> bool:
    """Orbit search: is b = a.with_move(N) for some |N| <= |2^n' - 2^n|?

    The window covers every pair of models whose nu_2 lies in the
    enumeration range [-|2^n' - 2^n|, |2^n' - 2^n|].
    """
    if (a.n, a.n_prime, a.h) != (b.n, b.n_prime, b.h) or set(a.nu) != set(b.nu):
        return False
    shift = 2 ** a.n_prime - 2 ** a.n
    if shift == 0:
        return a == b
    for N in range(-abs(shift), abs(shift) + 1):
        if a.nu[2] + N * shift == b.nu[2] and a.with_move(N) == b:
            return True
    return False


def enumerate_classes(
    n: int,
    n_prime: int,
    h_range: Iterable[int],
    k_max: int = 12,
    special_only: bool = False,
    primes: Iterable[int] | None = None,
) -> list:
    """Equivalence classes (h, z mod G) of models surviving every verifier.

    nu_2 runs over all integers in [-|2^n' - 2^n|, |2^n' - 2^n|]; values
    that do not give integral nu_l produce no model.
    """
    if n == n_prime:
        raise ValueError("enumeration needs n != n'")
    h_range = list(h_range)
    primes = list(primes) if primes is not None else primes_upto(k_max)
    D = abs(2 ** n_prime - 2 ** n)
    labels = set()
    for nu2 in range(-D, D + 1):
        try:
            base = ExtensionModel.from_nu2(n, n_prime, 0, nu2, k_max)
        except NonIntegralDivision:
            continue
        if verify_commutation(base) is not None:
            continue
        for h in h_range:
            model = ExtensionModel(n, n_prime, h, base.nu)
            if verify_ring_homomorphism(model) is not None:
                continue
            if special_only and verify_special(model, primes) is not None:
                continue
            labels.add(class_label(model))
    return sorted(labels)


def lab_report(model: ExtensionModel, k_max: int | None = None, primes=(2, 3, 5, 7), special=True) -> dict:
    def js(result):
        return None if result is None else result.to_json()

    report = {
        "model": model.to_json(),
        "commutation": js(verify_commutation(model, k_max)),
        "ring_homomorphism": js(verify_ring_homomorphism(model, k_max)),
    }
    if special:
        report["special"] = js(verify_special(model, primes))
    try:
        report["class"] = list(class_label(model))
    except (ValueError, NonIntegralDivision):
        report["class"] = None
    report["ok"] = all(report[key] is None for key in ("commutation", "ring_homomorphism", "special") if key in report)
    return report
