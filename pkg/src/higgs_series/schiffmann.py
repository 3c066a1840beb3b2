"""Schiffmann's partition terms through the symmetrized function f.

For arguments w_1..w_n,

    f(w) = prod_i P(1)/P(w_i) * sum over sigma in S_n of sigma{
               prod_{i>j} P(w_i/w_j) / ((1 - w_i/w_j) P(q w_i/w_j))
             * prod_{i>j+1} (1 - q w_i/w_j) * prod_{i>=2} (1 - w_i) }

with P(x) = prod_k (1 - alpha_k^-1 x).  The term for a partition is
Omega'_mu = f_mu * prod_i N_mu(alpha_i^-1) / N_mu(1), where f_mu is f at
the monomials z_i(mu) = q^(i - l(mu)) z^(mu_i).

Arguments are monomials: in evaluation mode they live in (q, z); in
symbolic mode the varset carries formal variables z1..zn.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Sequence

from .algebra import LaurentPoly, VarSet
from . import mozgovoy
from .mozgovoy import HiggsContext, h_from_omega, omega_g_factors
from .parallel import pmap
from .partitions import Partition, gen_partitions, z_seq
from .plethystic import TSeries
from .ratfunc import DenominatorVanishes, FactoredRat, rf_sum
from .records import VerificationRecord


class DegenerateArguments(ValueError):
    pass


def _alpha_inv(vs: VarSet, k: int) -> LaurentPoly:
    return LaurentPoly.var(vs, f"a{k}", -1)


def p_factors(x: LaurentPoly, g: int) -> list[LaurentPoly]:
    return [1 - _alpha_inv(x.varset, k) * x for k in range(1, g + 1)]


def p_poly(x: LaurentPoly, g: int) -> LaurentPoly:
    out = LaurentPoly.one(x.varset)
    for f in p_factors(x, g):
        out = out * f
    return out


def _summand(args: Sequence[LaurentPoly], g: int) -> FactoredRat | None:
    vs = args[0].varset
    q = LaurentPoly.var(vs, "q")
    n = len(args)
    num: list[LaurentPoly] = [LaurentPoly.one(vs)]
    den: list[LaurentPoly] = []
    for i in range(1, n):
        f = 1 - args[i]
        if f.is_zero():
            return None
        num.append(f)
    for i in range(n):
        for j in range(i):
            ratio = args[i] * args[j] ** -1
            if i > j + 1:
                f = 1 - q * ratio
                if f.is_zero():
                    return None
                num.append(f)
            num.extend(p_factors(ratio, g))
            d = 1 - ratio
            if d.is_zero():
                raise DegenerateArguments("two arguments coincide")
            den.append(d)
            for f in p_factors(q * ratio, g):
                if f.is_zero():
                    raise DegenerateArguments(f"P(q w_i/w_j) vanishes at {ratio!r}")
                den.append(f)
    return FactoredRat.build(num, den, reduce=False)


def _summand_job(job):
    args, g = job
    return _summand(args, g)


def f_eval(args: Sequence[LaurentPoly], g: int, vs: VarSet | None = None, threads: int = 1) -> FactoredRat:
    """f at monomial arguments; f() = 1 for the empty argument list."""
    args = list(args)
    if not args:
        if vs is None:
            raise ValueError("f() needs a varset")
        return FactoredRat.const(vs, 1)
    vs = args[0].varset
    for a in args:
        if not a.is_monomial():
            raise ValueError("f arguments must be monomials")
    for i, j in itertools.combinations(range(len(args)), 2):
        if args[i] == args[j]:
            raise DegenerateArguments(f"arguments {i} and {j} coincide")
    jobs = [([args[s] for s in sigma], g) for sigma in itertools.permutations(range(len(args)))]
    summands = [s for s in pmap(_summand_job, jobs, threads) if s is not None]
    total = rf_sum(summands, vs)
    pre_num: list[LaurentPoly] = [LaurentPoly.one(vs)]
    pre_den: list[LaurentPoly] = []
    one = LaurentPoly.one(vs)
    for a in args:
        pre_num.extend(p_factors(one, g))
        pre_den.extend(p_factors(a, g))
    return total.mul(FactoredRat.build(pre_num, pre_den, reduce=False))


def f_mu(mu: Partition, ctx: HiggsContext, n: int | None = None, threads: int = 1) -> FactoredRat:
    """f at z_i(mu); with n > l(mu) the padded sequence is used instead."""
    mu = Partition(mu)
    if n is None or n == len(mu):
        n = len(mu)
    return _f_mu_cached(mu, ctx.g, n, threads)


@lru_cache(maxsize=256)
def _f_mu_cached(mu: Partition, g: int, n: int, threads: int) -> FactoredRat:
    vs = VarSet.standard(g)
    if n == 0:
        return FactoredRat.const(vs, 1)
    return f_eval(z_seq(mu, vs, n), g, vs, threads)


def omega_prime_term(mu: Partition, ctx: HiggsContext, threads: int = 1) -> FactoredRat:
    num, den = omega_g_factors(mu, ctx)
    return f_mu(mu, ctx, threads=threads).mul_factors(num, den)


def _omega_prime_coeff(job) -> FactoredRat:
    n, ctx = job
    return rf_sum([omega_prime_term(mu, ctx) for mu in gen_partitions(n)], ctx.varset)


def omega_prime_series(ctx: HiggsContext, threads: int = 1) -> TSeries:
    vs = ctx.varset
    coeffs = [FactoredRat.const(vs, 1)]
    coeffs += pmap(_omega_prime_coeff, [(n, ctx) for n in range(1, ctx.R + 1)], threads)
    return TSeries(vs, tuple(coeffs))


def h_prime_series(ctx: HiggsContext, threads: int = 1) -> TSeries:
    return h_from_omega(omega_prime_series(ctx, threads))


def h_prime_coeff(ctx: HiggsContext, r: int, series: TSeries | None = None) -> FactoredRat:
    if not 1 <= r <= ctx.R:
        raise ValueError(f"rank {r} outside 1..{ctx.R}")
    return (series or h_prime_series(ctx))[r].reduced()


# -- checks ---------------------------------------------------------------

def check_laurent_in_z(ctx: HiggsContext, r: int, series: TSeries | None = None) -> VerificationRecord:
    """Surviving denominator factors of H'_r may involve q only."""
    return _laurent_in_z_record(h_prime_coeff(ctx, r, series), {"g": ctx.g, "r": r})


def _laurent_in_z_record(value: FactoredRat, instance: dict) -> VerificationRecord:
    bad = [(f, m) for f, m in value.factors() if f.variables() - {"q"}]
    if bad:
        shown = "; ".join(f"({f.to_text(sep=' + ')})^{m}" for f, m in bad)
        return VerificationRecord("laurent_in_z", instance, False, f"offending factors: {shown}")
    qonly = len(value.factors())
    return VerificationRecord("laurent_in_z", instance, True, f"{qonly} q-only factor(s) remain")


def compare_at_z1(
    ctx: HiggsContext,
    r: int,
    h: TSeries | None = None,
    h_prime: TSeries | None = None,
) -> VerificationRecord:
    inst = {"g": ctx.g, "r": r}
    lhs = h_prime_coeff(ctx, r, h_prime)
    rhs = (h or mozgovoy.h_series(ctx))[r]
    try:
        lhs1 = lhs.specialize({"z": 1})
        rhs1 = rhs.specialize({"z": 1})
    except DenominatorVanishes as exc:
        return VerificationRecord("compare_at_z1", inst, False, str(exc))
    ok = lhs1.equals(rhs1)
    return VerificationRecord("compare_at_z1", inst, ok, "" if ok else "H' and H differ at z=1")


def l_n_identity(n: int) -> VerificationRecord:
    """The symmetrized sum without alpha factors equals 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    vs = VarSet.standard(0, n_formal=n)
    args = [LaurentPoly.var(vs, f"z{i}") for i in range(1, n + 1)]
    val = f_eval(args, 0).reduced()
    ok = val.is_polynomial() and val.num.is_one()
    detail = "" if ok else f"got {val!r}"
    return VerificationRecord("L_n_identity", {"n": n}, ok, detail)


def regularity_check(n: int, ctx: HiggsContext) -> VerificationRecord:
    """f(1, z1..zn) = f(q z1, ..., q zn) with formal z's."""
    vs = VarSet.standard(ctx.g, n_formal=n)
    q = LaurentPoly.var(vs, "q")
    zs = [LaurentPoly.var(vs, f"z{i}") for i in range(1, n + 1)]
    lhs = f_eval([LaurentPoly.one(vs)] + zs, ctx.g)
    rhs = f_eval([q * x for x in zs], ctx.g, vs)
    ok = lhs.equals(rhs)
    return VerificationRecord("regularity", {"g": ctx.g, "n": n}, ok, "" if ok else "sides differ")


def denominator_bound_check(mu: Partition, ctx: HiggsContext) -> VerificationRecord:
    """f_mu times prod over cells of P(z^(a+1) q^-l) P(z^-a q^(l+1)) is a Laurent polynomial."""
    mu = Partition(mu)
    q, z = ctx.var("q"), ctx.var("z")
    factors = []
    for a, l in mu.arms_legs():
        factors += p_factors(z ** (a + 1) * q**-l, ctx.g)
        factors += p_factors(z**-a * q ** (l + 1), ctx.g)
    val = f_mu(mu, ctx).mul_factors(factors)
    return _poly_record("denominator_bound", {"g": ctx.g, "mu": list(mu)}, val)


def progression_args(blocks: Sequence[int], g: int) -> list[LaurentPoly]:
    """Arguments split into blocks of sizes r_m, block m being the geometric
    progression w_m, q w_m, q^2 w_m, ... over a formal base w_m."""
    vs = VarSet.standard(g, n_formal=len(blocks))
    q = LaurentPoly.var(vs, "q")
    out = []
    for m, r in enumerate(blocks, start=1):
        w = LaurentPoly.var(vs, f"z{m}")
        out += [q**i * w for i in range(r)]
    return out


def progression_bound_check(blocks: Sequence[int], ctx: HiggsContext) -> VerificationRecord:
    """f times prod_i P(z_i) prod_{m: j_m + r_m > i} P(q^r_m z_jm / z_i)
    prod_{m: j_m > i} P(q z_i / z_jm) is a Laurent polynomial, for arguments
    made of q-progressions."""
    blocks = [int(r) for r in blocks]
    if not blocks or min(blocks) < 1:
        raise ValueError("blocks must be positive sizes")
    args = progression_args(blocks, ctx.g)
    vs = args[0].varset
    q = LaurentPoly.var(vs, "q")
    starts = [sum(blocks[:m]) for m in range(len(blocks))]  # 0-based j_m
    factors = []
    for i, zi in enumerate(args):
        factors += p_factors(zi, ctx.g)
        for jm, r in zip(starts, blocks):
            zj = args[jm]
            if jm + r > i:
                factors += p_factors(q**r * zj * zi**-1, ctx.g)
            if jm > i:
                factors += p_factors(q * zi * zj**-1, ctx.g)
    val = f_eval(args, ctx.g).mul_factors(factors)
    return _poly_record("progression_bound", {"g": ctx.g, "blocks": blocks}, val)


def check_n_omega_polynomial(mu: Partition, ctx: HiggsContext) -> VerificationRecord:
    """N_mu(1) * Omega'_mu is a Laurent polynomial."""
    mu = Partition(mu)
    num, den = omega_g_factors(mu, ctx)
    q, z = ctx.var("q"), ctx.var("z")
    for a, l in mu.arms_legs():
        num += [z**a - q ** (1 + l), z ** (a + 1) - q**l]
    val = f_mu(mu, ctx).mul_factors(num, den)
    return _poly_record("N_mu_omega_polynomial", {"g": ctx.g, "mu": list(mu)}, val)


def _poly_record(name: str, inst: dict, val: FactoredRat) -> VerificationRecord:
    val = val.reduced()
    if val.is_polynomial():
        return VerificationRecord(name, inst, True, "")
    shown = "; ".join(f"({f.to_text(sep=' + ')})^{m}" for f, m in val.factors())
    return VerificationRecord(name, inst, False, f"surviving factors: {shown}")
