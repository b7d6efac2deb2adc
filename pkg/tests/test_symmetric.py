import itertools
from math import comb, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from psiring.bigpoly import MultiPoly, NonIntegralDivision, Var, parse_poly
from psiring.symmetric import (
    NotSymmetric,
    OperationSequence,
    SymmetricContext,
    compute_universal_P,
    compute_universal_Pij,
    express_in_elementary,
    lambda_sequence,
    newton_lambda_from_psi,
    newton_psi_from_lambda,
    psi_sequence,
    universal_P,
    universal_Pij,
)

P = parse_poly


def roots(family, d):
    return [MultiPoly.var(family, i) for i in range(1, d + 1)]


def e_brute(items, k):
    """Elementary symmetric function as an explicit sum over k-subsets."""
    total = MultiPoly.const(1) if k == 0 else MultiPoly()
    if k == 0:
        return total
    for subset in itertools.combinations(items, k):
        term = MultiPoly.const(1)
        for x in subset:
            term = term * x
        total = total + term
    return total


def back_substitute(poly, assignments):
    """Replace target symbols family_k by e_k of the matching root list."""
    bindings = {}
    for family, items in assignments.items():
        for k in range(1, len(items) + 1):
            bindings[Var(family, k)] = e_brute(items, k)
    missing = {v for v in poly.variables() if v not in bindings}
    for v in missing:
        bindings[v] = MultiPoly()  # e_k vanishes beyond the number of roots
    return poly.substitute(bindings)


class TestExpressInElementary:
    def test_examples(self):
        assert express_in_elementary(P("x1 + x2")) == P("e1")
        assert express_in_elementary(P("x1^2 + x2^2")) == P("e1^2 - 2*e2")
        assert express_in_elementary(P("x1*x2")) == P("e2")

    def test_not_symmetric(self):
        with pytest.raises(NotSymmetric) as info:
            express_in_elementary(P("x1^2 + x2"))
        assert info.value.transposition == (Var("x", 1), Var("x", 2))

    def test_outside_root_set(self):
        with pytest.raises(ValueError):
            express_in_elementary(P("x3"))

    def test_bisymmetric_with_coefficients(self):
        ctx = SymmetricContext(roots=(("x", 2), ("y", 2)), targets=("r", "s"))
        f = P("x1*y1 + x1*y2 + x2*y1 + x2*y2 + c1*x1*x2")
        assert express_in_elementary(f, ctx) == P("r1*s1 + c1*r2")

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.integers(-5, 5)), max_size=4))
    def test_roundtrip_on_symmetrised_polys(self, terms):
        xs = roots("x", 3)
        f = MultiPoly()
        for e1, e2, e3, c in terms:
            for perm in itertools.permutations(xs):
                f = f + c * perm[0] ** e1 * perm[1] ** e2 * perm[2] ** e3
        g = express_in_elementary(f, SymmetricContext(roots=(("x", 3),)))
        assert back_substitute(g, {"e": xs}) == f

    def test_power_sums_newton(self):
        # p_k in terms of e for d=4 agrees with Newton's identity
        xs = roots("x", 4)
        ctx = SymmetricContext(roots=(("x", 4),))
        e = [None] + [MultiPoly.var("e", k) for k in range(1, 5)]
        p = [None]
        for k in range(1, 5):
            acc = (-1) ** (k - 1) * k * e[k]
            for i in range(1, k):
                acc = acc + (-1) ** (i - 1) * e[i] * p[k - i]
            p.append(acc)
            assert express_in_elementary(sum((x ** k for x in xs), MultiPoly()), ctx) == acc


class TestUniversalPolynomials:
    def test_small_cases(self):
        assert universal_P(1) == P("r1*s1")
        assert universal_P(2) == P("r2*s1^2 + r1^2*s2 - 2*r2*s2")
        assert universal_Pij(2, 2) == P("r3*r1 - r4")
        assert universal_Pij(1, 2) == P("r2")
        assert universal_Pij(3, 1) == P("r3")

    @pytest.mark.parametrize("i", [1, 2, 3, 4])
    def test_P_back_substitution(self, i):
        xs, ys = roots("x", i), roots("y", i)
        expected = e_brute([x * y for x in xs for y in ys], i)
        assert back_substitute(universal_P(i), {"r": xs, "s": ys}) == expected

    @pytest.mark.parametrize("i,j", [(2, 2), (2, 3), (3, 2)])
    def test_Pij_back_substitution(self, i, j):
        xs = roots("x", i * j)
        products = [prod(s, start=MultiPoly.const(1)) for s in itertools.combinations(xs, j)]
        assert back_substitute(universal_Pij(i, j), {"r": xs}) == e_brute(products, i)

    @pytest.mark.parametrize("i", [1, 2, 3, 4])
    def test_golden_matches_recomputation(self, i):
        assert universal_P(i) == compute_universal_P(i)

    @pytest.mark.parametrize("i,j", [(2, 2), (2, 3), (3, 2)])
    def test_golden_pij_matches_recomputation(self, i, j):
        assert universal_Pij(i, j) == compute_universal_Pij(i, j)

    def test_weight_cap(self):
        with pytest.raises(ValueError):
            compute_universal_Pij(4, 4)

    def test_P_is_weighted_homogeneous(self):
        # weight of r_k and s_k is k; P_i has weight i in each alphabet
        for i in range(1, 5):
            for mono in universal_P(i).terms:
                assert sum(v.index * e for v, e in mono if v.family == "r") == i
                assert sum(v.index * e for v, e in mono if v.family == "s") == i


class TestNewton:
    def test_psi_from_lambda_on_Z(self):
        for m in range(0, 8):
            seq = OperationSequence([comb(m, i) for i in range(1, 7)], "lambda")
            assert psi_sequence(seq, 6) == [m] * 6
        assert newton_psi_from_lambda(OperationSequence([5, 10], "lambda"), 2) == 5

    def test_lambda_from_psi_on_Z(self):
        assert newton_lambda_from_psi(OperationSequence([5, 5], "psi"), 2) == 10
        for m in range(-4, 11):
            assert lambda_sequence(OperationSequence([m] * 6, "psi"), 6) == [comb_signed(m, i) for i in range(1, 7)]

    def test_symbolic_psi2(self):
        seq = OperationSequence([P("r1"), P("r2")], "lambda")
        psi2 = newton_psi_from_lambda(seq, 2)
        assert psi2 == P("r1^2 - 2*r2")
        xs = roots("x", 3)
        assert back_substitute(psi2, {"r": xs}) == sum((x ** 2 for x in xs), MultiPoly())

    def test_symbolic_roundtrip(self):
        lam = OperationSequence([MultiPoly.var("r", k) for k in range(1, 6)], "lambda")
        psis = OperationSequence(psi_sequence(lam, 5), "psi")
        assert lambda_sequence(psis, 5) == list(lam.values)

    def test_free_psi_ring_is_not_special(self):
        seq = OperationSequence([P("a1"), P("a2")], "psi")
        with pytest.raises(NonIntegralDivision) as info:
            newton_lambda_from_psi(seq, 2)
        assert info.value.divisor == 2
        assert info.value.element in (P("a1^2 - a2"), P("a2 - a1^2"))

    def test_bad_sequences(self):
        with pytest.raises(ValueError):
            newton_lambda_from_psi(OperationSequence([1], "lambda"), 1)
        with pytest.raises(ValueError):
            newton_lambda_from_psi(OperationSequence([1], "psi"), 2)
        with pytest.raises(ValueError):
            OperationSequence([1], "gamma")

    @given(st.lists(st.integers(-20, 20), min_size=5, max_size=5))
    def test_roundtrip_integers(self, lam):
        psis = psi_sequence(OperationSequence(lam, "lambda"), 5)
        assert lambda_sequence(OperationSequence(psis, "psi"), 5) == lam


def comb_signed(m, i):
    """Generalised binomial C(m, i) for any integer m."""
    num = 1
    for t in range(i):
        num *= m - t
    den = 1
    for t in range(1, i + 1):
        den *= t
    return num // den
