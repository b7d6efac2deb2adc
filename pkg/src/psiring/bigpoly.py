"""Sparse multivariate polynomials with exact integer coefficients.

Variables are indexed generators such as ``a3`` (family ``"a"``, index 3).
A monomial is a sorted tuple of ``(Var, exponent)`` pairs and a polynomial
is an immutable mapping from monomials to nonzero ``int`` coefficients, so
two equal polynomials always have identical term maps.

>>> p = parse_poly("3*a1^2*b2 - 5")
>>> format_poly(p * p)
'9*a1^4*b2^2 - 30*a1^2*b2 + 25'
"""
from __future__ import annotations

import re
from operator import itemgetter
from types import MappingProxyType
from typing import Callable, Iterable, Mapping

__all__ = [
    "Var",
    "MultiPoly",
    "UnboundVariable",
    "PolySyntaxError",
    "NonIntegralDivision",
    "poly_add",
    "poly_mul",
    "substitute",
    "poly_mod",
    "parse_poly",
    "format_poly",
]

FAMILIES = "abcdefghijklmnopqrstuvwxyz"


class UnboundVariable(KeyError):
    pass


class PolySyntaxError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


class NonIntegralDivision(ArithmeticError):
    """Raised when an exact division by an integer leaves a remainder.

    ``element`` is the dividend that failed and ``divisor`` the integer.
    """

    def __init__(self, element, divisor: int):
        super().__init__(f"{element} is not divisible by {divisor}")
        self.element = element
        self.divisor = divisor


class Var(tuple):
    """Indexed generator ``family_index``; compares by (family, index)."""

    __slots__ = ()

    def __new__(cls, family: str, index: int):
        if not (isinstance(family, str) and len(family) == 1 and family in FAMILIES):
            raise ValueError(f"variable family must be one letter a-z, got {family!r}")
        if not isinstance(index, int) or index < 1:
            raise ValueError(f"variable index must be a positive integer, got {index!r}")
        return tuple.__new__(cls, (family, index))

    family = property(itemgetter(0))
    index = property(itemgetter(1))

    def __repr__(self):
        return f"{self[0]}{self[1]}"

    def __getnewargs__(self):
        return tuple(self)


# A monomial is a tuple of (Var, exp) pairs sorted by Var, exponents >= 1.
Monomial = tuple


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    out = []
    i = j = 0
    while i < len(m1) and j < len(m2):
        v1, e1 = m1[i]
        v2, e2 = m2[j]
        if v1 == v2:
            out.append((v1, e1 + e2))
            i += 1
            j += 1
        elif v1 < v2:
            out.append(m1[i])
            i += 1
        else:
            out.append(m2[j])
            j += 1
    out.extend(m1[i:])
    out.extend(m2[j:])
    return tuple(out)


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def mono_key(m: Monomial):
    """Graded-lex sort key: larger key means larger monomial.

    Variables rank a1 > a2 > ... > b1 > ..., so a monomial with a positive
    exponent on an earlier variable wins at the first difference.
    """
    return (mono_degree(m), tuple((-ord(v[0]), -v[1], e) for v, e in m))


def _canonical(terms: Mapping[Monomial, int]) -> dict:
    return {m: c for m, c in terms.items() if c}


class MultiPoly:
    """Immutable polynomial over Z in indexed variables."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self._terms = _canonical(terms or {})
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, c: int) -> "MultiPoly":
        return cls({(): c})

    @classmethod
    def var(cls, family: str, index: int, exp: int = 1) -> "MultiPoly":
        return cls({((Var(family, index), exp),): 1})

    @classmethod
    def from_monomial(cls, mono: Mapping[Var, int], coeff: int = 1) -> "MultiPoly":
        m = tuple(sorted((v, e) for v, e in mono.items() if e))
        if any(e < 0 for _, e in m):
            raise ValueError("negative exponent")
        return cls({m: coeff})

    @staticmethod
    def coerce(x) -> "MultiPoly":
        if isinstance(x, MultiPoly):
            return x
        if isinstance(x, int):
            return MultiPoly.const(x)
        if isinstance(x, Var):
            return MultiPoly({((x, 1),): 1})
        return NotImplemented

    # -- inspection -------------------------------------------------------
    @property
    def terms(self) -> Mapping[Monomial, int]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {()}

    def constant_term(self) -> int:
        return self._terms.get((), 0)

    def coefficient(self, mono: Mapping[Var, int] | Monomial) -> int:
        if isinstance(mono, Mapping):
            mono = tuple(sorted(mono.items()))
        return self._terms.get(tuple(mono), 0)

    def variables(self) -> frozenset:
        return frozenset(v for m in self._terms for v, _ in m)

    def families(self) -> frozenset:
        return frozenset(v[0] for v in self.variables())

    def degree(self) -> int:
        return max((mono_degree(m) for m in self._terms), default=-1)

    def sorted_terms(self) -> list:
        """Terms in decreasing graded-lex order."""
        return sorted(self._terms.items(), key=lambda t: mono_key(t[0]), reverse=True)

    def leading_term(self) -> tuple:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self._terms, key=mono_key)
        return m, self._terms[m]

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = MultiPoly.coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return MultiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = MultiPoly.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return MultiPoly({m: c * other for m, c in self._terms.items()})
        other = MultiPoly.coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return MultiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MultiPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def divide_exact(self, k: int) -> "MultiPoly":
        """Divide every coefficient by ``k``; raise NonIntegralDivision otherwise."""
        if any(c % k for c in self._terms.values()):
            raise NonIntegralDivision(self, k)
        return MultiPoly({m: c // k for m, c in self._terms.items()})

    def mod(self, m: int) -> "MultiPoly":
        if m < 2:
            raise ValueError("modulus must be at least 2")
        return MultiPoly({mono: c % m for mono, c in self._terms.items()})

    # -- substitution -----------------------------------------------------
    def map_vars(self, fn: Callable[[Var], Var]) -> "MultiPoly":
        """Rename variables monomial-wise (a ring map sending variables to variables)."""
        out: dict = {}
        for m, c in self._terms.items():
            new: dict = {}
            for v, e in m:
                w = fn(v)
                new[w] = new.get(w, 0) + e
            key = tuple(sorted(new.items()))
            out[key] = out.get(key, 0) + c
        return MultiPoly(out)

    def evaluate(self, bindings: Mapping[Var, object], one=1):
        """Evaluate in any commutative ring whose elements support + and *.

        ``one`` is the unit of the target ring; integer coefficients act by
        repeated addition via ``coeff * value``.
        """
        total = None
        powers: dict = {}
        for m, c in self._terms.items():
            term = one
            for v, e in m:
                try:
                    val = bindings[v]
                except KeyError:
                    raise UnboundVariable(v) from None
                key = (v, e)
                if key not in powers:
                    p = one
                    for _ in range(e):
                        p = p * val
                    powers[key] = p
                term = term * powers[key]
            term = term * c if not isinstance(term, int) else c * term
            total = term if total is None else total + term
        if total is None:
            return one * 0 if not isinstance(one, int) else 0
        return total

    def substitute(self, bindings: Mapping[Var, object], fixed: Iterable = ()) -> "MultiPoly":
        fixed = set(fixed)
        full = {}
        for v in self.variables():
            if v in bindings:
                full[v] = MultiPoly.coerce(bindings[v])
            elif v in fixed or v[0] in fixed:
                full[v] = MultiPoly({((v, 1),): 1})
            else:
                raise UnboundVariable(v)
        return self.evaluate(full, one=MultiPoly.const(1))

    # -- comparison / display ---------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"MultiPoly({format_poly(self)!r})"


def poly_add(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p + q


def poly_mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p * q


def substitute(p: MultiPoly, bindings: Mapping[Var, object], fixed: Iterable = ()) -> MultiPoly:
    return p.substitute(bindings, fixed)


def poly_mod(p: MultiPoly, m: int) -> MultiPoly:
    return p.mod(m)


# -- text format ------------------------------------------------------------

def _format_monomial(m: Monomial) -> str:
    return "*".join(f"{v[0]}{v[1]}" + (f"^{e}" if e != 1 else "") for v, e in m)


def format_poly(p: MultiPoly) -> str:
    terms = p.sorted_terms()
    if not terms:
        return "0"
    parts = []
    for k, (m, c) in enumerate(terms):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not m:
            body = str(a)
        elif a == 1:
            body = _format_monomial(m)
        else:
            body = f"{a}*{_format_monomial(m)}"
        if k == 0:
            parts.append(("-" if sign == "-" else "") + body)
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>[a-z])|(?P<op>[-+*^]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolySyntaxError(f"unexpected character {text[start]!r}", text, start)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def parse_poly(text: str) -> MultiPoly:
    """Parse ``3*a1^2*b2 - 5`` style text into a MultiPoly.

    term := [sign] [coeff "*"] factor ("*" factor)* | [sign] decimal;
    factor := family index ["^" exp], with index and exp at least 1.
    """
    toks = _tokenize(text)
    i = 0

    def peek():
        return toks[i]

    def take(kind, what):
        nonlocal i
        tok = toks[i]
        if tok[0] != kind:
            raise PolySyntaxError(f"expected {what}", text, tok[2])
        i += 1
        return tok

    def positive(tok, what):
        val = int(tok[1])
        if val < 1:
            raise PolySyntaxError(f"{what} must be at least 1", text, tok[2])
        return val

    def factor():
        _, fam, _ = take("var", "variable")
        idx = positive(take("num", "variable index"), "index")
        exp = 1
        if peek()[:2] == ("op", "^"):
            take("op", "'^'")
            exp = positive(take("num", "exponent"), "exponent")
        return Var(fam, idx), exp

    result: dict = {}
    first = True
    while True:
        sign = 1
        tok = peek()
        if tok[0] == "op" and tok[1] in "+-":
            if first and tok[1] == "+":
                raise PolySyntaxError("unexpected '+'", text, tok[2])
            sign = -1 if tok[1] == "-" else 1
            i += 1
        elif not first:
            raise PolySyntaxError("expected '+' or '-'", text, tok[2])
        first = False
        coeff = 1
        mono: dict = {}
        tok = peek()
        if tok[0] == "num":
            coeff = int(tok[1])
            i += 1
            if peek()[:2] == ("op", "*"):
                i += 1
                v, e = factor()
                mono[v] = mono.get(v, 0) + e
        else:
            v, e = factor()
            mono[v] = mono.get(v, 0) + e
        while peek()[:2] == ("op", "*"):
            i += 1
            v, e = factor()
            mono[v] = mono.get(v, 0) + e
        key = tuple(sorted(mono.items()))
        result[key] = result.get(key, 0) + sign * coeff
        if peek()[0] == "end":
            break
    return MultiPoly(result)
