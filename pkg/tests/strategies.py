"""Hypothesis strategies shared by the test modules."""
from hypothesis import strategies as st

from psiring.bigpoly import MultiPoly, Var

coeffs = st.integers(min_value=-50, max_value=50)


def variables(families="ab", max_index=4):
    return st.builds(Var, st.sampled_from(families), st.integers(1, max_index))


def monomials(families="ab", max_index=4, max_exp=3, max_vars=3):
    return st.dictionaries(variables(families, max_index), st.integers(1, max_exp), max_size=max_vars)


def polys(families="ab", max_index=4, max_terms=4, **kw):
    term = st.tuples(monomials(families, max_index, **kw), coeffs)

    def build(terms):
        p = MultiPoly()
        for mono, c in terms:
            p = p + MultiPoly.from_monomial(mono, c)
        return p

    return st.lists(term, max_size=max_terms).map(build)
