"""Descriptors for finitely generated abelian groups cut out by congruences."""
from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["Congruence", "AbelianGroupDescriptor"]


@dataclass(frozen=True)
class Congruence:
    """sum(coeffs[name] * x[name]) == 0 (mod modulus).

    ``modulus`` is an int, or the string ``"p"`` for a family of
    congruences indexed by primes (``note`` says which primes).
    """

    coeffs: dict
    modulus: int | str
    note: str = ""

    def holds(self, point: dict) -> bool:
        if not isinstance(self.modulus, int):
            raise TypeError("symbolic congruences cannot be evaluated")
        return sum(c * point.get(name, 0) for name, c in self.coeffs.items()) % self.modulus == 0

    def __str__(self):
        lhs = [name if c == 1 else f"{c}{name}" for name, c in self.coeffs.items() if c]
        if not lhs:
            return f"0 ≡ 0 mod {self.modulus}"
        if len(lhs) == 2:
            text = f"{lhs[0]} ≡ {lhs[1]}"
        else:
            text = " + ".join(lhs) + " ≡ 0"
        text += f" mod {self.modulus}"
        return f"{text} ({self.note})" if self.note else text

    def to_json(self) -> dict:
        out = {"coeffs": dict(self.coeffs), "modulus": self.modulus}
        if self.note:
            out["note"] = self.note
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Congruence":
        return cls(dict(data["coeffs"]), data["modulus"], data.get("note", ""))


@dataclass(frozen=True)
class AbelianGroupDescriptor:
    """Z^free_rank (+) Z_t1 (+) ... , optionally with a symbolic prod_p Z factor.

    When ``congruences`` is nonempty the group is the subgroup of that
    ambient group on which every congruence holds.  ``coordinates`` names
    the free coordinates followed by the torsion coordinates.
    """

    free_rank: int
    torsion: tuple = ()
    per_prime_free: bool = False
    congruences: tuple = ()
    odd_h_admissible: bool | None = None
    coordinates: tuple = field(default=("h", "z"))

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        if any(t < 2 for t in self.torsion):
            raise ValueError("torsion orders must be at least 2")
        object.__setattr__(self, "torsion", tuple(self.torsion))
        object.__setattr__(self, "congruences", tuple(self.congruences))

    def ambient(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z_{t}" for t in self.torsion]
        if self.per_prime_free:
            parts.append("∏_p Z")
        return " ⊕ ".join(parts) or "0"

    def forces_even(self, name: str = "h") -> bool:
        return any(c.coeffs == {name: 1} and c.modulus == 2 for c in self.congruences)

    def __str__(self):
        if not self.congruences:
            return self.ambient()
        if len(self.congruences) == 1 and self.forces_even("h") and not self.per_prime_free:
            rest = [f"Z_{t}" for t in self.torsion]
            return " ⊕ ".join(["2Z"] + ["Z"] * (self.free_rank - 1) + rest)
        coords = ", ".join(self.coordinates)
        conds = ", ".join(str(c) for c in self.congruences)
        return f"{{({coords}) ∈ {self.ambient()} : {conds}}}"

    def contains(self, point: dict) -> bool:
        return all(c.holds(point) for c in self.congruences)

    def to_json(self) -> dict:
        return {
            "free_rank": self.free_rank,
            "torsion": list(self.torsion),
            "per_prime_free": self.per_prime_free,
            "congruences": [c.to_json() for c in self.congruences],
            "odd_h_admissible": self.odd_h_admissible,
            "coordinates": list(self.coordinates),
        }

    @classmethod
    def from_json(cls, data: dict) -> "AbelianGroupDescriptor":
        return cls(
            free_rank=data["free_rank"],
            torsion=tuple(data["torsion"]),
            per_prime_free=data["per_prime_free"],
            congruences=tuple(Congruence.from_json(c) for c in data.get("congruences", [])),
            odd_h_admissible=data.get("odd_h_admissible"),
            coordinates=tuple(data.get("coordinates", ("h", "z"))),
        )
