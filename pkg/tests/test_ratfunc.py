import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from higgs_series.algebra import LaurentPoly, VarSet, VarSetMismatch
from higgs_series.ratfunc import (
    DenominatorVanishes,
    FactoredRat,
    NotPolynomial,
    canonical_factor,
    rf_add,
    rf_frobenius,
    rf_mul,
    rf_reduce,
    rf_specialize,
    rf_sum,
    rf_to_poly,
)
from strategies import VS, binomials, polys

q = LaurentPoly.var(VS, "q")
z = LaurentPoly.var(VS, "z")
a1 = LaurentPoly.var(VS, "a1")
ONE = LaurentPoly.one(VS)


def rat(num, *den):
    return FactoredRat.build(num, list(den))


def test_mul_examples():
    assert rf_mul(rat(ONE, 1 - q), FactoredRat(1 - q)).to_poly() == 1
    sq = rf_mul(rat(ONE, 1 - q), rat(ONE, 1 - q))
    (f, m), = sq.factors()
    assert m == 2 and f in (1 - q, q - 1)
    x, y = z**2, a1
    prod = rf_mul(rat(x, 1 - z), rat(y, 1 - q))
    assert prod.num.is_monomial() and len(prod.factors()) == 2
    assert prod.equals(FactoredRat.build(x * y, [1 - z, 1 - q]))


def test_add_examples():
    assert rf_add(rat(ONE, 1 - q), rat(-q, 1 - q)).to_poly() == 1
    f, g = 1 - q, 1 - z
    s = rf_add(rat(a1, f), rat(z, g))
    assert s.equals(FactoredRat.build(a1 * g + z * f, [f, g]))


def test_add_with_sign_canonicalization():
    vs = VarSet(("z1", "z2"))
    z1, z2 = LaurentPoly.var(vs, "z1"), LaurentPoly.var(vs, "z2")
    s = rf_add(FactoredRat.build(z1, [z1 - z2]), FactoredRat.build(z2, [z2 - z1]))
    assert s.to_poly() == 1


def test_reduce_examples():
    assert rf_reduce(rat(1 - q**2, 1 - q)).to_poly() == 1 + q
    assert rf_reduce(FactoredRat.build((1 - q) * (1 - z), [1 - q, 1 - z], reduce=False)).to_poly() == 1
    r = rf_reduce(FactoredRat.build(z - a1, [1 - q], reduce=False))
    assert len(r.factors()) == 1
    assert r.equals(FactoredRat.build(z - a1, [1 - q], reduce=False))
    assert r.mul(FactoredRat(1 - q)).to_poly() == z - a1


def test_to_poly_examples():
    assert rf_to_poly(rat(1 - q**2, 1 - q)) == 1 + q
    with pytest.raises(NotPolynomial) as info:
        rf_to_poly(rat(ONE, 1 - q))
    (f, m), = info.value.factors
    assert m == 1 and (f == 1 - q or f == q - 1)


def test_frobenius_and_specialize_examples():
    assert rf_frobenius(rat(ONE, 1 - q), 2).equals(rat(ONE, 1 - q**2))
    assert rf_specialize(rat(1 - z, 1 - q), {"z": 1}).is_zero()
    with pytest.raises(DenominatorVanishes):
        rf_specialize(rat(ONE, 1 - z), {"z": 1})


def test_units_move_to_numerator():
    r = FactoredRat.build(ONE, [2 * q * (1 - z)])
    (f, m), = r.factors()
    assert len(f) == 2 and f.leading()[1] > 0
    assert r.num.is_monomial()
    assert r.mul(FactoredRat(2 * q * (1 - z))).to_poly() == 1


def test_canonical_factor_sign_and_content():
    u, f = canonical_factor(-2 * q**-1 + 2 * z * q**-1)
    assert f.leading()[1] > 0
    assert u * f == -2 * q**-1 + 2 * z * q**-1


def test_varset_mismatch():
    other = FactoredRat.const(VarSet.standard(2), 1)
    with pytest.raises(VarSetMismatch):
        rf_mul(FactoredRat.const(VS, 1), other)


def test_json_roundtrip():
    r = FactoredRat.build(z - a1, [(1 - q, 2), 1 - z * q])
    back = FactoredRat.from_json(VS, r.to_json())
    assert back.to_json() == r.to_json()


def test_mul_factors_cancels_structurally():
    r = FactoredRat.build(z, [1 - q, 1 - z * a1])
    out = r.mul_factors([q - 1, 3 * (1 - z * a1)])
    assert out.to_poly() == -3 * z


# -- properties -------------------------------------------------------------

dens = st.lists(binomials(), min_size=1, max_size=3)


@given(polys(max_terms=3), dens)
def test_clearing_denominators(p, den):
    prod = ONE
    for f in den:
        prod = prod * f
    assert FactoredRat.build(p * prod, den).to_poly() == p


@given(polys(max_terms=3), polys(max_terms=3), binomials(), binomials())
def test_add_is_cross_multiplication(a, b, f, g):
    uf, cf = canonical_factor(f)
    ug, cg = canonical_factor(g)
    if cf != cg and uf == 1 and ug == 1:
        raw = rf_add(FactoredRat.build(a, [f]), FactoredRat.build(b, [g]), reduce=False)
        assert raw.num == a * g + b * f
    lhs = rf_add(FactoredRat.build(a, [f]), FactoredRat.build(b, [g]))
    rhs = FactoredRat.build(a * g + b * f, [f, g])
    assert lhs.equals(rhs)


@given(polys(max_terms=3), dens)
def test_reduction_is_confluent(p, den):
    prod = ONE
    for f in den[:-1]:
        prod = prod * f
    raw = FactoredRat.build(p * prod, den, reduce=False)
    base = raw.reduced().to_json()
    order = [f for f, _ in raw.factors()]
    for perm in itertools.islice(itertools.permutations(order), 6):
        assert raw.reduced(order=list(perm)).to_json() == base


@given(polys(max_terms=2), polys(max_terms=2), dens, dens)
def test_mul_matches_value(a, b, d1, d2):
    x, y = FactoredRat.build(a, d1), FactoredRat.build(b, d2)
    prod = x.mul(y)
    for f in d1 + d2:
        prod = prod.mul(FactoredRat(f))
    assert prod.to_poly() == a * b


@given(polys(max_terms=2), dens)
def test_sum_order_independent_value(a, den):
    terms = [FactoredRat.build(a, [f]) for f in den]
    fwd = rf_sum(terms, VS)
    back = rf_sum(list(reversed(terms)), VS)
    assert fwd.equals(back)
