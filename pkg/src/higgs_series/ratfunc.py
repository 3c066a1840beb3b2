"""Rational functions with an explicitly factored denominator.

A :class:`FactoredRat` is ``num / prod(f_i ** m_i)``.  There is no
polynomial GCD anywhere: every denominator built by this package is a
product of binomials, so cancellation is decided by trial exact division.
If the true reduced denominator is empty, greedy trial division always
empties it (a product dividing the numerator means each factor divides,
and the cofactor still divides what remains), so a surviving factor is a
genuine witness of non-polynomiality.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .algebra import LaurentPoly, NotDivisible, VarSet, VarSetMismatch, poly_from_json, poly_to_json


class NotPolynomial(ArithmeticError):
    """The reduced rational function still has denominator factors."""

    def __init__(self, factors: Sequence[tuple[LaurentPoly, int]]):
        self.factors = list(factors)
        shown = ", ".join(f"({f.to_text(sep=' + ')})^{m}" for f, m in self.factors)
        super().__init__(f"surviving denominator factors: {shown}")


class DenominatorVanishes(ZeroDivisionError):
    pass


def canonical_factor(p: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Split p = unit * factor.  A unit is a scalar times a monomial; the
    factor is primitive, monomial-free, and has positive leading term.
    For a single-term p the factor is 1."""
    c, m, prim = p.unit_and_primitive()
    unit = LaurentPoly(p.varset, {m: c.numerator if c.denominator == 1 else c})
    return unit, prim


def _merge(den: dict, factor: LaurentPoly, mult: int) -> None:
    den[factor] = den.get(factor, 0) + mult


class FactoredRat:
    """Immutable numerator over a multiset of canonical binomial-type factors."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: Mapping[LaurentPoly, int] | None = None):
        # trusted constructor: den must already be canonical
        self.num = num
        self.den: dict[LaurentPoly, int] = {f: m for f, m in (den or {}).items() if m}

    @property
    def varset(self) -> VarSet:
        return self.num.varset

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> FactoredRat:
        return cls(p)

    @classmethod
    def const(cls, vs: VarSet, c) -> FactoredRat:
        return cls(LaurentPoly.const(vs, c))

    @classmethod
    def build(
        cls,
        num: LaurentPoly | Iterable[LaurentPoly],
        den: Iterable[LaurentPoly | tuple[LaurentPoly, int]] = (),
        *,
        reduce: bool = True,
    ) -> FactoredRat:
        """Assemble from a numerator (a polynomial or a list of polynomial
        factors) and raw denominator factors.

        Denominator units move into the numerator.  When the numerator is
        given as a factor list, factors structurally equal to denominator
        factors cancel before anything is multiplied out.
        """
        if isinstance(num, LaurentPoly):
            vs = num.varset
            num_factors = [num]
        else:
            num_factors = list(num)
            if not num_factors:
                raise ValueError("empty numerator factor list needs a varset; pass LaurentPoly.one(vs)")
            vs = num_factors[0].varset
        unit = LaurentPoly.one(vs)
        dmap: dict[LaurentPoly, int] = {}
        for item in den:
            f, m = item if isinstance(item, tuple) else (item, 1)
            if f.varset != vs:
                raise VarSetMismatch("denominator factor in a different varset")
            if f.is_zero():
                raise ZeroDivisionError("zero denominator factor")
            u, cf = canonical_factor(f)
            unit = unit * u**m
            if not cf.is_one():
                _merge(dmap, cf, m)
        num_poly = unit ** -1 if not unit.is_one() else LaurentPoly.one(vs)
        rest = []
        for f in num_factors:
            if f.varset != vs:
                raise VarSetMismatch("numerator factor in a different varset")
            if f.is_zero():
                return cls(LaurentPoly.zero(vs))
            if len(f) < 2:
                num_poly = num_poly * f
                continue
            u, cf = canonical_factor(f)
            if dmap.get(cf):
                dmap[cf] -= 1
                num_poly = num_poly * u
            else:
                rest.append(f)
        for f in rest:
            num_poly = num_poly * f
        out = cls(num_poly, dmap)
        return out.reduced() if reduce else out

    # -- queries ----------------------------------------------------------
    def is_polynomial(self) -> bool:
        return not self.den

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def factors(self) -> list[tuple[LaurentPoly, int]]:
        """Denominator factors in deterministic order."""
        return sorted(self.den.items(), key=lambda fm: fm[0].sort_key())

    def denominator(self) -> LaurentPoly:
        d = LaurentPoly.one(self.varset)
        for f, m in self.factors():
            d = d * f**m
        return d

    # -- reduction --------------------------------------------------------
    def reduced(self, order: Sequence[LaurentPoly] | None = None) -> FactoredRat:
        num = self.num
        if num.is_zero():
            return FactoredRat(num)
        den = dict(self.den)
        seq = order if order is not None else [f for f, _ in self.factors()]
        for f in seq:
            while den.get(f):
                try:
                    num = num.exact_div(f)
                except NotDivisible:
                    break
                den[f] -= 1
        return FactoredRat(num, den)

    def to_poly(self) -> LaurentPoly:
        r = self.reduced()
        if r.den:
            raise NotPolynomial(r.factors())
        return r.num

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> FactoredRat:
        if isinstance(other, FactoredRat):
            if other.varset != self.varset:
                raise VarSetMismatch("FactoredRat varsets differ")
            return other
        if isinstance(other, LaurentPoly):
            if other.varset != self.varset:
                raise VarSetMismatch("FactoredRat varsets differ")
            return FactoredRat(other)
        return FactoredRat.const(self.varset, other)

    def mul(self, other, *, reduce: bool = True) -> FactoredRat:
        other = self._coerce(other)
        num = self.num * other.num
        if num.is_zero():
            return FactoredRat(num)
        den = dict(self.den)
        for f, m in other.den.items():
            _merge(den, f, m)
        out = FactoredRat(num, den)
        return out.reduced() if reduce else out

    def mul_factors(
        self,
        num: Iterable[LaurentPoly],
        den: Iterable[LaurentPoly | tuple[LaurentPoly, int]] = (),
        *,
        reduce: bool = True,
    ) -> FactoredRat:
        """Multiply by prod(num) / prod(den) given as unexpanded factor lists.

        Numerator factors cancel structurally against every denominator
        factor (ours and the new ones) before anything is multiplied out.
        """
        vs = self.varset
        unit = LaurentPoly.one(vs)
        dmap = dict(self.den)
        for item in den:
            f, m = item if isinstance(item, tuple) else (item, 1)
            if f.varset != vs:
                raise VarSetMismatch("denominator factor in a different varset")
            if f.is_zero():
                raise ZeroDivisionError("zero denominator factor")
            u, cf = canonical_factor(f)
            unit = unit * u**m
            if not cf.is_one():
                _merge(dmap, cf, m)
        rest = []
        scalar = unit**-1
        for f in num:
            if f.varset != vs:
                raise VarSetMismatch("numerator factor in a different varset")
            if f.is_zero():
                return FactoredRat(LaurentPoly.zero(vs))
            u, cf = canonical_factor(f)
            if not cf.is_one() and dmap.get(cf):
                dmap[cf] -= 1
                scalar = scalar * u
            else:
                rest.append(f)
        out = FactoredRat(self.num * scalar, dmap)
        if reduce:
            out = out.reduced()
        # multiply the leftovers in one at a time, dividing as we go keeps
        # the numerator small
        for f in rest:
            out = FactoredRat(out.num * f, out.den)
            if reduce:
                out = out.reduced()
        return out

    def __mul__(self, other):
        try:
            return self.mul(other)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def scale(self, c) -> FactoredRat:
        return FactoredRat(self.num.scale(c), self.den)

    def add(self, other, *, reduce: bool = True) -> FactoredRat:
        other = self._coerce(other)
        return rf_sum([self, other], self.varset, reduce=reduce)

    def __add__(self, other):
        try:
            return self.add(other)
        except TypeError:
            return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return FactoredRat(-self.num, self.den)

    def __sub__(self, other):
        try:
            return self.add(-self._coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return (-self).add(other)

    def inverse(self) -> FactoredRat:
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        u, cf = canonical_factor(self.num)
        if self.den:
            raise ValueError("inverse only supported for polynomial FactoredRats")
        return FactoredRat.build(u ** -1, [] if cf.is_one() else [cf])

    def frobenius(self, k: int) -> FactoredRat:
        den = [(f.frobenius(k), m) for f, m in self.den.items()]
        return FactoredRat.build(self.num.frobenius(k), den)

    def specialize(self, bindings, target: VarSet | None = None) -> FactoredRat:
        num = self.num.specialize(bindings, target)
        den = []
        for f, m in self.factors():
            sf = f.specialize(bindings, target)
            if sf.is_zero():
                raise DenominatorVanishes(f"factor {f.to_text(sep=' + ')} vanishes under {dict(bindings)}")
            den.append((sf, m))
        if num.is_zero():
            return FactoredRat(num)
        return FactoredRat.build(num, den)

    def equals(self, other) -> bool:
        """Value equality of rational functions (cross-multiplication)."""
        other = self._coerce(other)
        return (self - other).reduced().num.is_zero()

    def __eq__(self, other):
        if isinstance(other, (FactoredRat, LaurentPoly, int, Fraction)):
            return self.equals(other)
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        den = " * ".join(f"({f.to_text(sep=' + ')})^{m}" for f, m in self.factors())
        return f"FactoredRat(({self.num.to_text(sep=' + ')}) / [{den}])"

    # -- serialization ----------------------------------------------------
    def to_json(self) -> dict:
        return {
            "num": poly_to_json(self.num),
            "den": [{"factor": poly_to_json(f), "mult": m} for f, m in self.factors()],
        }

    @classmethod
    def from_json(cls, vs: VarSet, data: dict) -> FactoredRat:
        num = poly_from_json(vs, data["num"])
        den = [(poly_from_json(vs, d["factor"]), int(d["mult"])) for d in data["den"]]
        return cls.build(num, den, reduce=False)


def rf_sum(terms: Sequence[FactoredRat], vs: VarSet | None = None, *, reduce: bool = True) -> FactoredRat:
    """Sum over the least common multiple of all factor multisets.

    Shared factors are detected structurally; the combination order is the
    order of `terms`, so the result is deterministic.
    """
    if vs is None:
        if not terms:
            raise ValueError("empty sum needs an explicit varset")
        vs = terms[0].varset
    terms = [t for t in terms if not t.is_zero()]
    if not terms:
        return FactoredRat(LaurentPoly.zero(vs))
    if len(terms) == 1:
        return terms[0].reduced() if reduce else terms[0]
    lcm: dict[LaurentPoly, int] = {}
    for t in terms:
        if t.varset != vs:
            raise VarSetMismatch("rf_sum over different varsets")
        for f, m in t.den.items():
            if m > lcm.get(f, 0):
                lcm[f] = m
    order = sorted(lcm, key=LaurentPoly.sort_key)
    num = LaurentPoly.zero(vs)
    for t in terms:
        cof = t.num
        for f in order:
            extra = lcm[f] - t.den.get(f, 0)
            if extra:
                cof = cof * f**extra
        num = num + cof
    out = FactoredRat(num, lcm)
    return out.reduced() if reduce else out


# operation-style aliases
def rf_mul(a: FactoredRat, b: FactoredRat) -> FactoredRat:
    return a.mul(b)


def rf_add(a: FactoredRat, b: FactoredRat) -> FactoredRat:
    return a.add(b)


def rf_reduce(a: FactoredRat) -> FactoredRat:
    return a.reduced()


def rf_to_poly(a: FactoredRat) -> LaurentPoly:
    return a.to_poly()


def rf_frobenius(a: FactoredRat, k: int) -> FactoredRat:
    return a.frobenius(k)


def rf_specialize(a: FactoredRat, bindings, target: VarSet | None = None) -> FactoredRat:
    return a.specialize(bindings, target)
