"""The cell-product series Omega_g and its plethystic logarithm H_g.

Omega_g = sum over partitions mu of T^|mu| times, for every cell,

    prod_i (z^(a+1) - alpha_i q^l)(z^a - alpha_i^-1 q^(l+1))
    ---------------------------------------------------------
            (z^(a+1) - q^l)(z^a - q^(l+1))

and H_g = -(1-q)(1-z) pLog Omega_g.  Setting z = 1 in the rank-r
coefficient gives the count A_{g,r}; E-polynomial and Poincare
specializations follow from A.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .algebra import LaurentPoly, VarSet
from .parallel import pmap
from .partitions import Partition, gen_partitions
from .plethystic import TSeries, plog
from .ratfunc import FactoredRat, NotPolynomial, rf_sum
from .records import VerificationRecord


class PolynomialityFailure(NotPolynomial):
    """A coefficient that the theory says is a Laurent polynomial is not."""


@dataclass(frozen=True)
class HiggsContext:
    g: int
    R: int = 1

    def __post_init__(self):
        if self.g < 0:
            raise ValueError("genus must be >= 0")
        if self.R < 1:
            raise ValueError("truncation order must be >= 1")

    @cached_property
    def varset(self) -> VarSet:
        return VarSet.standard(self.g)

    @property
    def extended_range(self) -> bool:
        """g = 0 lies outside the g >= 1 range of the closed formula for A."""
        return self.g == 0

    def var(self, name: str, power: int = 1) -> LaurentPoly:
        return LaurentPoly.var(self.varset, name, power)

    def alpha(self, i: int, power: int = 1) -> LaurentPoly:
        return self.var(f"a{i}", power)


def omega_g_factors(mu: Partition, ctx: HiggsContext) -> tuple[list[LaurentPoly], list[LaurentPoly]]:
    """Unexpanded numerator and denominator factors of the mu-term."""
    q, z = ctx.var("q"), ctx.var("z")
    num: list[LaurentPoly] = []
    den: list[LaurentPoly] = []
    for a, l in Partition(mu).arms_legs():
        for i in range(1, ctx.g + 1):
            num.append(z ** (a + 1) - ctx.alpha(i) * q**l)
            num.append(z**a - ctx.alpha(i, -1) * q ** (l + 1))
        den.append(z ** (a + 1) - q**l)
        den.append(z**a - q ** (l + 1))
    return num, den


def omega_g_term(mu: Partition, ctx: HiggsContext) -> FactoredRat:
    num, den = omega_g_factors(mu, ctx)
    return FactoredRat.build([LaurentPoly.one(ctx.varset)] + num, den)


def _omega_coeff(args) -> FactoredRat:
    n, ctx = args
    return rf_sum([omega_g_term(mu, ctx) for mu in gen_partitions(n)], ctx.varset)


def omega_g_series(ctx: HiggsContext, threads: int = 1) -> TSeries:
    vs = ctx.varset
    coeffs = [FactoredRat.const(vs, 1)]
    coeffs += pmap(_omega_coeff, [(n, ctx) for n in range(1, ctx.R + 1)], threads)
    return TSeries(vs, tuple(coeffs))


def h_prefactor(vs: VarSet) -> LaurentPoly:
    q, z = LaurentPoly.var(vs, "q"), LaurentPoly.var(vs, "z")
    return -(1 - q) * (1 - z)


def h_from_omega(omega: TSeries) -> TSeries:
    return plog(omega).scale(h_prefactor(omega.varset))


def h_series(ctx: HiggsContext, threads: int = 1) -> TSeries:
    return h_from_omega(omega_g_series(ctx, threads))


def coeff_to_poly(h: TSeries, r: int) -> LaurentPoly:
    if not 1 <= r <= h.order:
        raise ValueError(f"rank {r} outside 1..{h.order}")
    try:
        return h[r].to_poly()
    except NotPolynomial as exc:
        raise PolynomialityFailure(exc.factors) from None


def h_poly(ctx: HiggsContext, r: int, series: TSeries | None = None) -> LaurentPoly:
    if not 1 <= r <= ctx.R:
        raise ValueError(f"rank {r} outside 1..{ctx.R}")
    return coeff_to_poly(series or h_series(ctx), r)


def a_from_h(h: LaurentPoly) -> LaurentPoly:
    return h.specialize({"z": 1})


def a_poly(ctx: HiggsContext, r: int, series: TSeries | None = None) -> LaurentPoly:
    return a_from_h(h_poly(ctx, r, series))


E_VARS = VarSet(("x", "y"))
S_VARS = VarSet(("s",))


def e_from_a(a: LaurentPoly, g: int, r: int) -> LaurentPoly:
    """(xy)^(1+(g-1)r^2) A(q -> xy, alpha_i -> x)."""
    x, y = LaurentPoly.var(E_VARS, "x"), LaurentPoly.var(E_VARS, "y")
    binds = {"q": x * y, "z": 1}
    binds.update({f"a{i}": x for i in range(1, g + 1)})
    return a.specialize(binds, E_VARS) * (x * y) ** (1 + (g - 1) * r * r)


def poincare_from_a(a: LaurentPoly, g: int, r: int) -> LaurentPoly:
    """s^(2(1+(g-1)r^2)) A(q -> s^2, alpha_i -> s), where s = q^(1/2)."""
    s = LaurentPoly.var(S_VARS, "s")
    binds = {"q": s * s, "z": 1}
    binds.update({f"a{i}": s for i in range(1, g + 1)})
    return a.specialize(binds, S_VARS) * s ** (2 * (1 + (g - 1) * r * r))


def e_poly(ctx: HiggsContext, r: int, series: TSeries | None = None) -> LaurentPoly:
    return e_from_a(a_poly(ctx, r, series), ctx.g, r)


def poincare_poly(ctx: HiggsContext, r: int, series: TSeries | None = None) -> LaurentPoly:
    return poincare_from_a(a_poly(ctx, r, series), ctx.g, r)


# -- checks ---------------------------------------------------------------

def _inst(ctx: HiggsContext, r: int) -> dict:
    inst = {"g": ctx.g, "r": r}
    if ctx.extended_range:
        inst["extended_range"] = True
    return inst


def check_polynomial(ctx: HiggsContext, r: int, series: TSeries | None = None) -> VerificationRecord:
    try:
        h = h_poly(ctx, r, series)
    except PolynomialityFailure as exc:
        return VerificationRecord("H_polynomial", _inst(ctx, r), False, str(exc))
    return VerificationRecord("H_polynomial", _inst(ctx, r), True, f"{len(h)} terms")


def alpha_swap(h: LaurentPoly, i: int, j: int) -> LaurentPoly:
    vs = h.varset
    return h.specialize({f"a{i}": LaurentPoly.var(vs, f"a{j}"), f"a{j}": LaurentPoly.var(vs, f"a{i}")})


def alpha_dual(h: LaurentPoly, i: int) -> LaurentPoly:
    """alpha_i -> q / alpha_i."""
    vs = h.varset
    return h.specialize({f"a{i}": LaurentPoly.monomial(vs, {"q": 1, f"a{i}": -1})})


def check_symmetry(ctx: HiggsContext, r: int, series: TSeries | None = None) -> list[VerificationRecord]:
    """H is symmetric in the alpha_i; A = H(z=1) is also invariant under
    alpha_i -> q/alpha_i (H itself is not: already H_1 = (z - a)(1 - q/a)
    changes); E is symmetric in x and y."""
    inst = _inst(ctx, r)
    try:
        h = h_poly(ctx, r, series)
    except PolynomialityFailure as exc:
        return [VerificationRecord("alpha_symmetry", inst, False, str(exc))]
    a = a_from_h(h)
    bad = [f"a{i}<->a{j}" for i in range(1, ctx.g + 1) for j in range(i + 1, ctx.g + 1) if alpha_swap(h, i, j) != h]
    out = [VerificationRecord("alpha_symmetry", inst, not bad, "broken by " + ", ".join(bad) if bad else "")]
    bad = [f"a{i}->q/a{i}" for i in range(1, ctx.g + 1) if alpha_dual(a, i) != a]
    out.append(VerificationRecord("A_alpha_duality", inst, not bad, "broken by " + ", ".join(bad) if bad else ""))
    e = e_from_a(a, ctx.g, r)
    x, y = LaurentPoly.var(E_VARS, "x"), LaurentPoly.var(E_VARS, "y")
    ok = e.specialize({"x": y, "y": x}) == e
    out.append(VerificationRecord("E_xy_symmetry", inst, ok, "" if ok else "E(x,y) != E(y,x)"))
    return out


def rank1_h_oracle(g: int) -> LaurentPoly:
    """prod_i (z - alpha_i)(1 - q/alpha_i), read off the single-cell term."""
    vs = VarSet.standard(g)
    q, z = LaurentPoly.var(vs, "q"), LaurentPoly.var(vs, "z")
    out = LaurentPoly.one(vs)
    for i in range(1, g + 1):
        a = LaurentPoly.var(vs, f"a{i}")
        out = out * (z - a) * (1 - q * a**-1)
    return out


def rank1_a_oracle(g: int) -> LaurentPoly:
    """prod over all 2g Weil numbers of (1 - alpha_i), alpha_(i+g) = q/alpha_i."""
    vs = VarSet.standard(g)
    q = LaurentPoly.var(vs, "q")
    weil = [LaurentPoly.var(vs, f"a{i}") for i in range(1, g + 1)]
    weil += [q * w**-1 for w in weil]
    out = LaurentPoly.one(vs)
    for w in weil:
        out = out * (1 - w)
    return out


def rank1_poincare_oracle(g: int) -> LaurentPoly:
    s = LaurentPoly.var(S_VARS, "s")
    return s ** (2 * g) * (1 - s) ** (2 * g)


def check_rank1(g: int) -> list[VerificationRecord]:
    ctx = HiggsContext(g, 1)
    inst = _inst(ctx, 1)
    try:
        h = h_poly(ctx, 1)
    except PolynomialityFailure as exc:
        return [VerificationRecord("rank1_H", inst, False, str(exc))]
    a = a_from_h(h)
    pairs = [
        ("rank1_H", h, rank1_h_oracle(g)),
        ("rank1_A", a, rank1_a_oracle(g)),
        ("rank1_poincare", poincare_from_a(a, g, 1), rank1_poincare_oracle(g)),
    ]
    return [VerificationRecord(name, inst, got == want, "" if got == want else "differs from closed form") for name, got, want in pairs]
