from functools import lru_cache

import pytest
from hypothesis import given
from hypothesis import strategies as st

from higgs_series.algebra import LaurentPoly, VarSet
from higgs_series.mozgovoy import HiggsContext, omega_g_factors
from higgs_series.partitions import (
    Partition,
    arm,
    b_poly,
    b_star,
    bracket,
    compositions,
    conjugate,
    gen_partitions,
    leg,
    n_mu,
    z_seq,
)

VS = VarSet.standard(1)
q = LaurentPoly.var(VS, "q")
z = LaurentPoly.var(VS, "z")
a1 = LaurentPoly.var(VS, "a1")


@lru_cache(maxsize=None)
def euler_p(n):
    """Partition numbers through the pentagonal number recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total, k = 0, 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * (euler_p(n - g1) + euler_p(n - g1 - k))
        k += 1
    return total


def sized(max_n=8):
    return st.integers(0, max_n).flatmap(lambda n: st.sampled_from(gen_partitions(n)))


def test_gen_examples():
    assert gen_partitions(0) == [Partition()]
    assert len(gen_partitions(4)) == 5
    assert len(gen_partitions(10)) == 42 == euler_p(10)


def test_gen_counts_and_order():
    for n in range(15):
        ps = gen_partitions(n)
        assert len(ps) == euler_p(n) == len(set(ps))
        assert all(p.size == n for p in ps)
        assert ps == sorted(ps, reverse=True)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([2, 0])


def test_arm_leg_examples():
    assert (arm((2, 1), (1, 1)), leg((2, 1), (1, 1))) == (1, 1)
    for c in range(4):
        assert arm((), (1, c + 1)) == -1 - c
    assert (arm((3, 1), (2, 1)), leg((3, 1), (2, 1))) == (0, 0)


def test_conjugate_bracket_examples():
    assert conjugate((2, 1)) == (2, 1) and bracket((2, 1)) == 5
    assert conjugate((3,)) == (1, 1, 1) and bracket((3,)) == 3
    assert conjugate((4, 2, 1)) == (3, 2, 1, 1) and bracket((4, 2, 1)) == 15


def test_b_examples():
    assert b_poly((), VS).is_zero()
    assert b_poly((1,), VS) == 1
    assert b_poly((2, 1), VS) == 1 + z + q
    assert b_star((2, 1), VS) == 1 + z**-1 + q**-1


def test_z_seq_examples():
    assert z_seq((1,), VS) == [z]
    assert z_seq((2, 2), VS) == [q**-1 * z**2, z**2]
    assert z_seq((3, 1), VS) == [q**-1 * z**3, z]
    assert z_seq((3, 1), VS, 4) == [q**-3 * z**3, q**-2 * z, q**-1, LaurentPoly.one(VS)]


def test_n_mu_examples():
    one = LaurentPoly.one(VS)
    assert n_mu((), one) == 1
    assert n_mu((1,), one) == (1 - q) * (z - 1)
    assert n_mu((1,), a1**-1) == (1 - a1**-1 * q) * (z - a1)


def test_compositions():
    assert compositions(0) == [()]
    assert sorted(compositions(3)) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert len(compositions(6)) == 2**5


@given(sized())
def test_conjugate_involution(mu):
    assert conjugate(conjugate(mu)) == mu
    assert sum(1 for _ in mu.cells()) == mu.size


@given(sized())
def test_leg_sums_give_bracket(mu):
    legs = [l for _, l in mu.arms_legs()]
    assert sum(legs) + sum(l + 1 for l in legs) == bracket(mu)


@given(sized())
def test_hook_lengths_positive_inside(mu):
    for a, l in mu.arms_legs():
        assert a >= 0 and l >= 0


@given(sized(6))
def test_n_mu_matches_cell_denominator(mu):
    """N_mu(1) is the product of the cell denominators up to sign and a monomial."""
    ctx = HiggsContext(1)
    _, den = omega_g_factors(mu, ctx)
    prod = LaurentPoly.one(ctx.varset)
    for f in den:
        prod = prod * f
    n1 = n_mu(mu, LaurentPoly.one(ctx.varset))
    c1, m1, p1 = n1.unit_and_primitive()
    c2, m2, p2 = prod.unit_and_primitive()
    assert p1 == p2 and abs(c1) == abs(c2)
