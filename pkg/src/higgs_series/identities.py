"""Checks of the standalone partition identities and of the J factorization.

Every identity is stated in the (q, z) variables with z_i(mu) = q^(i-l) z^(mu_i).
Polynomial identities compare canonical expansions; rational ones compare
FactoredRat values, which cross-multiplies over the common denominator.
"""
from __future__ import annotations

import itertools
from typing import Iterator

from .algebra import LaurentPoly, VarSet
from .mozgovoy import HiggsContext
from .partitions import Partition, b_poly, b_star, gen_partitions, z_seq
from .ratfunc import FactoredRat
from .records import VerificationRecord

PQ = VarSet.standard(0)
PQU = VarSet.standard(0, u=True)


def _q(vs: VarSet, e: int = 1) -> LaurentPoly:
    return LaurentPoly.var(vs, "q", e)


def _z(vs: VarSet, e: int = 1) -> LaurentPoly:
    return LaurentPoly.var(vs, "z", e)


def _mono(vs: VarSet, q: int, z: int) -> LaurentPoly:
    return LaurentPoly.monomial(vs, {"q": q, "z": z})


def _inst(mu: Partition, **extra) -> dict:
    return {"mu": list(mu), **extra}


# -- E_{mu,nu} ------------------------------------------------------------

def e_direct(mu: Partition, nu: Partition, vs: VarSet = PQ) -> LaurentPoly:
    """Sum over cells of mu of z^(-a_nu) q^(l_mu + 1) plus over cells of nu
    of z^(a_mu + 1) q^(-l_nu); arms and legs may be taken outside the diagram."""
    mu, nu = Partition(mu), Partition(nu)
    terms = [((1 + mu.leg(c), -nu.arm(c)), 1) for c in mu.cells()]
    terms += [((-nu.leg(c), mu.arm(c) + 1), 1) for c in nu.cells()]
    return _from_qz(vs, terms)


def _from_qz(vs: VarSet, terms) -> LaurentPoly:
    iq, iz = vs.index("q"), vs.index("z")
    out = []
    for (eq, ez), c in terms:
        v = [0] * vs.arity
        v[iq], v[iz] = eq, ez
        out.append((v, c))
    return LaurentPoly.from_terms(vs, out)


def e_closed(mu: Partition, nu: Partition, vs: VarSet = PQ) -> LaurentPoly:
    q, z = _q(vs), _z(vs)
    bm, bn = b_poly(mu, vs), b_star(nu, vs)
    return z * q * bm + bn - (z - 1) * (q - 1) * bm * bn


def check_e_closed_form(mu: Partition, nu: Partition) -> VerificationRecord:
    ok = e_direct(mu, nu) == e_closed(mu, nu)
    return VerificationRecord("E_closed_form", {"mu": list(mu), "nu": list(nu)}, ok, "" if ok else "sides differ")


# -- sum of the z_i --------------------------------------------------------

def check_sumz(mu: Partition) -> VerificationRecord:
    """sum_i z_i(mu) = q^(1-l) ((z-1) B_mu + (q^l - 1)/(q - 1))."""
    mu = Partition(mu)
    vs = PQ
    q, z = _q(vs), _z(vs)
    lhs = LaurentPoly.zero(vs)
    for x in z_seq(mu, vs):
        lhs = lhs + x
    l = len(mu)
    geom = (q**l - 1).exact_div(q - 1) if l else LaurentPoly.zero(vs)
    rhs = q ** (1 - l) * ((z - 1) * b_poly(mu, vs) + geom)
    ok = lhs == rhs
    return VerificationRecord("sum_z", _inst(mu), ok, "" if ok else "sides differ")


# -- ratio sum ------------------------------------------------------------

def check_ratio_sum(mu: Partition) -> VerificationRecord:
    """(1-q) sum_{i<j} z_i/z_j = (z^-1 - 1) sum_cells z^(a+1) q^-l + sum_i (z_i - 1)."""
    mu = Partition(mu)
    vs = PQ
    q, z = _q(vs), _z(vs)
    zs = z_seq(mu, vs)
    ratios = LaurentPoly.zero(vs)
    for i, j in itertools.combinations(range(len(zs)), 2):
        ratios = ratios + zs[i] * zs[j] ** -1
    lhs = (1 - q) * ratios
    cells = _from_qz(vs, [((-l, a + 1), 1) for a, l in mu.arms_legs()])
    rhs = (z**-1 - 1) * cells
    for x in zs:
        rhs = rhs + (x - 1)
    ok = lhs == rhs
    return VerificationRecord("ratio_sum", _inst(mu), ok, "" if ok else "sides differ")


# -- multiplicative form with a formal u ----------------------------------

def armleg_sides(mu: Partition) -> tuple[FactoredRat, FactoredRat]:
    mu = Partition(mu)
    vs = PQU
    q = _q(vs)
    u = LaurentPoly.var(vs, "u")
    zs = z_seq(mu, vs)
    one = LaurentPoly.one(vs)
    num, den = [one], []
    for i, j in itertools.combinations(range(len(zs)), 2):
        r = zs[i] * zs[j] ** -1
        num.append(1 - q * u * r)
        den.append(1 - u * r)
    lhs = FactoredRat.build(num, den)
    num, den = [one], []
    for a, l in mu.arms_legs():
        num.append(1 - u * _mono(vs, -l, a + 1))
        den.append(1 - u * _mono(vs, -l, a))
    for x in zs:
        num.append(1 - u)
        den.append(1 - u * x)
    return lhs, FactoredRat.build(num, den)


def check_armleg_product(mu: Partition) -> VerificationRecord:
    lhs, rhs = armleg_sides(mu)
    ok = lhs.equals(rhs)
    return VerificationRecord("armleg_product", _inst(mu), ok, "" if ok else "sides differ")


# -- J factorization ------------------------------------------------------

def j_mu(mu: Partition, ctx: HiggsContext) -> FactoredRat:
    """J_mu with the 2g Weil numbers alpha_(i+g) = q/alpha_i.  A factor
    (1 - q^-l z^a) vanishing identically (corner cells, a = l = 0) is omitted."""
    mu = Partition(mu)
    vs = ctx.varset
    q = ctx.var("q")
    alphas = [ctx.alpha(i) for i in range(1, ctx.g + 1)]
    alphas += [q * ctx.alpha(i, -1) for i in range(1, ctx.g + 1)]
    num, den = [LaurentPoly.one(vs)], []
    for a, l in mu.arms_legs():
        m = _mono(vs, -1 - l, a)
        num += [1 - al * m for al in alphas]
        den.append(1 - m)
        m0 = 1 - _mono(vs, -l, a)
        if not m0.is_zero():
            den.append(m0)
    return FactoredRat.build(num, den, reduce=False)


def abcd_factors(mu: Partition, ctx: HiggsContext) -> tuple[list[LaurentPoly], list[LaurentPoly]]:
    """Numerator and denominator factor lists of the product ABCD at z_i(mu).
    In C a factor 1 - q z_i/z_j that vanishes (adjacent equal parts) is omitted."""
    vs = ctx.varset
    q = ctx.var("q")
    one = LaurentPoly.one(vs)
    zs = z_seq(mu, vs)
    ainv = [ctx.alpha(k, -1) for k in range(1, ctx.g + 1)]
    num, den = [], []
    for i, j in itertools.combinations(range(len(zs)), 2):
        r = zs[i] * zs[j] ** -1
        num += [1 - a * r for a in ainv]  # A
        den += [1 - q * a * r for a in ainv]
        c = 1 - q * r  # C
        if not c.is_zero():
            num.append(c)
        den.append(1 - r)
    for x in zs:
        num += [one - a for a in ainv]  # B
        den += [1 - a * x for a in ainv]
        num.append(1 - x)  # D
    return num, den


def n_ratio_factors(mu: Partition, ctx: HiggsContext) -> tuple[list[LaurentPoly], list[LaurentPoly]]:
    """prod_i N_mu(alpha_i^-1) / N_mu(1) as factor lists."""
    q, z = ctx.var("q"), ctx.var("z")
    num, den = [], []
    for a, l in Partition(mu).arms_legs():
        for i in range(1, ctx.g + 1):
            num += [z**a - ctx.alpha(i, -1) * q ** (1 + l), z ** (a + 1) - ctx.alpha(i) * q**l]
        den += [z**a - q ** (1 + l), z ** (a + 1) - q**l]
    return num, den


def j_factorization_sides(mu: Partition, ctx: HiggsContext, q_power: int | None = None) -> tuple[FactoredRat, FactoredRat]:
    """q^k J_mu and prod N(alpha^-1)/N(1) * ABCD, with k = (g-1)<mu,mu> by default."""
    mu = Partition(mu)
    k = (ctx.g - 1) * mu.bracket() if q_power is None else q_power
    lhs = j_mu(mu, ctx).mul(ctx.var("q", k))
    num, den = abcd_factors(mu, ctx)
    n_num, n_den = n_ratio_factors(mu, ctx)
    rhs = FactoredRat.const(ctx.varset, 1).mul_factors(num + n_num, den + n_den)
    return lhs, rhs


def check_j_factorization(mu: Partition, ctx: HiggsContext) -> VerificationRecord:
    lhs, rhs = j_factorization_sides(mu, ctx)
    ok = lhs.equals(rhs)
    return VerificationRecord("J_factorization", _inst(mu, g=ctx.g), ok, "" if ok else "sides differ")


# -- suites ----------------------------------------------------------------

def partitions_upto(n: int, start: int = 0) -> Iterator[Partition]:
    for k in range(start, n + 1):
        yield from gen_partitions(k)


def identity_records(max_pair: int = 6, max_sumz: int = 8, max_ratio: int = 6, max_armleg: int = 5) -> list[VerificationRecord]:
    out = []
    for mu in partitions_upto(max_pair):
        for nu in partitions_upto(max_pair):
            out.append(check_e_closed_form(mu, nu))
    out += [check_sumz(mu) for mu in partitions_upto(max_sumz)]
    out += [check_ratio_sum(mu) for mu in partitions_upto(max_ratio)]
    out += [check_armleg_product(mu) for mu in partitions_upto(max_armleg)]
    return out


def j_records(max_size: int = 5, genera=(0, 1, 2)) -> list[VerificationRecord]:
    return [
        check_j_factorization(mu, HiggsContext(g))
        for g in genera
        for mu in partitions_upto(max_size)
    ]
