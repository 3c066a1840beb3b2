from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from higgs_series.algebra import LaurentPoly, VarSet
from higgs_series.mozgovoy import HiggsContext, omega_g_series
from higgs_series.plethystic import TSeries, mobius, pexp, plog, series_exp, series_log, series_mul
from higgs_series.ratfunc import FactoredRat

VS = VarSet(("q", "z"))
q = LaurentPoly.var(VS, "q")
z = LaurentPoly.var(VS, "z")


def ser(*coeffs):
    return TSeries.from_coeffs(VS, coeffs)


def same(a: TSeries, b: TSeries) -> bool:
    return a.order == b.order and all(x.equals(y) for x, y in zip(a.coeffs, b.coeffs))


def geometric(x, R):
    """1/(1 - x T) truncated at order R."""
    return ser(*[x**r if isinstance(x, LaurentPoly) else 1 for r in range(R + 1)])


def test_mobius():
    assert [mobius(n) for n in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]
    with pytest.raises(ValueError):
        mobius(0)


def test_series_mul_examples():
    assert same(series_mul(ser(1, 1, 0), ser(1, -1, 0)), ser(1, 0, -1))
    a = ser(1, q, z)
    assert same(a * TSeries.one(VS, 2), a)
    assert same(geometric(LaurentPoly.one(VS), 4) * ser(1, -1, 0, 0, 0), TSeries.one(VS, 4))


def test_series_log_examples():
    L = series_log(ser(1, 1, 0, 0, 0))
    assert same(L, ser(0, 1, Fraction(-1, 2), Fraction(1, 3), Fraction(-1, 4)))
    assert same(series_log(TSeries.one(VS, 3)), TSeries.zero(VS, 3))
    with pytest.raises(ValueError):
        series_log(ser(2, 1))


def test_plog_examples():
    one = LaurentPoly.one(VS)
    assert same(plog(geometric(one, 5)), ser(0, 1, 0, 0, 0, 0))
    # pExp[(1+q)T] = 1/((1-T)(1-qT)), expanded by hand to order 4
    prod = geometric(one, 4) * geometric(q, 4)
    assert same(prod, ser(1, 1 + q, 1 + q + q**2, 1 + q + q**2 + q**3, 1 + q + q**2 + q**3 + q**4))
    assert same(plog(prod), ser(0, 1 + q, 0, 0, 0))
    with pytest.raises(ValueError):
        plog(ser(0, 1))


def test_pexp_examples():
    assert same(pexp(ser(0, 1, 0, 0)), ser(1, 1, 1, 1))
    assert same(pexp(TSeries.zero(VS, 3)), TSeries.one(VS, 3))
    with pytest.raises(ValueError):
        pexp(ser(1, 1))


def test_roundtrip_on_omega():
    omega = omega_g_series(HiggsContext(1, 3))
    assert same(pexp(plog(omega)), omega)


def test_rational_coefficients():
    c = FactoredRat.build(LaurentPoly.one(VS), [1 - q])
    f = TSeries(VS, (FactoredRat.const(VS, 1), c, c.mul(c)))
    assert same(pexp(plog(f)), f)


def test_json_roundtrip():
    f = TSeries(VS, (FactoredRat.const(VS, 1), FactoredRat.build(z, [1 - q]), FactoredRat(q)))
    assert TSeries.from_json(f.to_json()).to_json() == f.to_json()


# -- properties -------------------------------------------------------------

small = st.lists(
    st.tuples(st.integers(0, 2), st.integers(-1, 2), st.integers(-2, 2).filter(bool)), max_size=2
).map(lambda ts: LaurentPoly.from_terms(VS, [((a, b), c) for a, b, c in ts]))


def series_with(c0, R):
    return st.lists(small, min_size=R, max_size=R).map(lambda cs: ser(c0, *cs))


@given(st.integers(1, 4).flatmap(lambda R: series_with(1, R)))
def test_pexp_plog_roundtrip(f):
    assert same(pexp(plog(f)), f)


@given(st.integers(1, 4).flatmap(lambda R: series_with(0, R)))
def test_plog_pexp_roundtrip(g):
    assert same(plog(pexp(g)), g)


@given(st.integers(1, 4).flatmap(lambda R: series_with(1, R)))
def test_exp_log_roundtrip(f):
    assert same(series_exp(series_log(f)), f)


@given(series_with(1, 4), series_with(1, 4))
def test_plog_homomorphism(f, g):
    assert same(plog(f * g), plog(f) + plog(g))


@given(series_with(0, 4), series_with(0, 4))
def test_pexp_homomorphism(f, g):
    assert same(pexp(f + g), pexp(f) * pexp(g))


@given(series_with(0, 5), st.integers(1, 3))
def test_frobenius_is_substitution(f, k):
    """psi_k on a series equals raising every variable, T included, to the k-th power."""
    vt = VarSet(("q", "z", "T"))
    T = LaurentPoly.var(vt, "T")
    flat = LaurentPoly.zero(vt)
    for r, c in enumerate(f.coeffs):
        flat = flat + c.num.specialize({}, vt) * T**r
    img = flat.frobenius(k)
    got = f.frobenius(k)
    for r in range(f.order + 1):
        coeff = LaurentPoly.from_terms(VS, [((e[0], e[1]), c) for e, c in img.terms() if e[2] == r])
        assert got[r].to_poly() == coeff
