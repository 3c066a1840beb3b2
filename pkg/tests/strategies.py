"""Hypothesis strategies shared by the test modules."""
from hypothesis import strategies as st

from higgs_series.algebra import LaurentPoly, VarSet

VS = VarSet.standard(1)  # q, z, a1
VS2 = VarSet.standard(2)


def polys(vs=VS, max_terms=4, lo=-2, hi=2):
    term = st.tuples(
        st.lists(st.integers(lo, hi), min_size=vs.arity, max_size=vs.arity),
        st.integers(-3, 3).filter(bool) | st.fractions(-2, 2, max_denominator=3).filter(bool),
    )
    return st.lists(term, max_size=max_terms).map(lambda ts: LaurentPoly.from_terms(vs, ts))


def nonzero_polys(vs=VS, max_terms=3):
    return polys(vs, max_terms).filter(lambda p: not p.is_zero())


def binomials(vs=VS):
    """Factors of the shape 1 - c * monomial, the only kind the engine divides by."""
    mono = st.lists(st.integers(-2, 2), min_size=vs.arity, max_size=vs.arity).filter(any)
    return st.tuples(mono, st.sampled_from([1, -1, 2])).map(
        lambda mc: 1 - LaurentPoly.monomial(vs, mc[0], mc[1])
    )
