"""Truncated power series in T with FactoredRat coefficients.

The Adams operation psi_k raises every variable, T included, to the k-th
power.  The plethystic logarithm is computed by Moebius inversion:

    (pLog f)_r = sum over k | r of mu(k)/k * psi_k(L)_{r}

where L = log f, and pExp g = exp(sum_k psi_k(g)/k).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import LaurentPoly, VarSet
from .ratfunc import FactoredRat, rf_sum


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("Moebius function is defined for n >= 1")
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


@dataclass(frozen=True)
class TSeries:
    """c_0 + c_1 T + ... + c_R T^R, everything above T^R discarded."""

    varset: VarSet
    coeffs: tuple[FactoredRat, ...]

    def __post_init__(self):
        if len(self.coeffs) < 2:
            raise ValueError("truncation order must be >= 1")
        for c in self.coeffs:
            if c.varset != self.varset:
                raise ValueError("coefficient in a different varset")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_coeffs(cls, vs: VarSet, coeffs: Sequence) -> TSeries:
        out = []
        for c in coeffs:
            if isinstance(c, LaurentPoly):
                c = FactoredRat(c)
            elif not isinstance(c, FactoredRat):
                c = FactoredRat.const(vs, c)
            out.append(c)
        return cls(vs, tuple(out))

    @classmethod
    def zero(cls, vs: VarSet, order: int) -> TSeries:
        return cls(vs, tuple(FactoredRat.const(vs, 0) for _ in range(order + 1)))

    @classmethod
    def one(cls, vs: VarSet, order: int) -> TSeries:
        z = FactoredRat.const(vs, 0)
        return cls(vs, (FactoredRat.const(vs, 1),) + (z,) * order)

    def __getitem__(self, r: int) -> FactoredRat:
        return self.coeffs[r]

    def _check(self, other: TSeries) -> None:
        if self.order != other.order or self.varset != other.varset:
            raise ValueError("series order or varset mismatch")

    def __add__(self, other: TSeries) -> TSeries:
        self._check(other)
        return TSeries(self.varset, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: TSeries) -> TSeries:
        self._check(other)
        return TSeries(self.varset, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c) -> TSeries:
        return TSeries(self.varset, tuple(x * c for x in self.coeffs))

    def __mul__(self, other: TSeries) -> TSeries:
        return series_mul(self, other)

    def frobenius(self, k: int) -> TSeries:
        """psi_k: coefficient r moves to index k*r and is itself Frobenius-twisted."""
        zero = FactoredRat.const(self.varset, 0)
        out = [zero] * (self.order + 1)
        for r in range(0, self.order // k + 1):
            out[k * r] = self.coeffs[r].frobenius(k)
        return TSeries(self.varset, tuple(out))

    def to_json(self) -> dict:
        return {
            "variables": list(self.varset.names),
            "genus": self.varset.genus,
            "order": self.order,
            "coeffs": [c.to_json() for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: dict) -> TSeries:
        vs = VarSet(tuple(data["variables"]), int(data["genus"]))
        coeffs = tuple(FactoredRat.from_json(vs, c) for c in data["coeffs"])
        if len(coeffs) != int(data["order"]) + 1:
            raise ValueError("coefficient count does not match the order")
        return cls(vs, coeffs)


def series_mul(a: TSeries, b: TSeries) -> TSeries:
    a._check(b)
    R = a.order
    out = []
    for r in range(R + 1):
        out.append(rf_sum([a[k] * b[r - k] for k in range(r + 1)], a.varset))
    return TSeries(a.varset, tuple(out))


def _require_const(f: TSeries, value: int, what: str) -> None:
    c0 = f[0].reduced()
    if not (c0.is_polynomial() and c0.num.constant_value() == value):
        raise ValueError(f"{what} needs constant term {value}")


def series_log(f: TSeries) -> TSeries:
    """L_0 = 0, L_r = F_r - (1/r) sum_{k=1}^{r-1} k L_k F_{r-k}."""
    _require_const(f, 1, "series_log")
    vs = f.varset
    L = [FactoredRat.const(vs, 0)]
    for r in range(1, f.order + 1):
        acc = [f[r]]
        for k in range(1, r):
            acc.append((L[k] * f[r - k]).scale(Fraction(-k, r)))
        L.append(rf_sum(acc, vs))
    return TSeries(vs, tuple(L))


def series_exp(g: TSeries) -> TSeries:
    """E_0 = 1, E_r = (1/r) sum_{k=1}^{r} k G_k E_{r-k}."""
    _require_const(g, 0, "series_exp")
    vs = g.varset
    E = [FactoredRat.const(vs, 1)]
    for r in range(1, g.order + 1):
        acc = [(g[k] * E[r - k]).scale(Fraction(k, r)) for k in range(1, r + 1)]
        E.append(rf_sum(acc, vs))
    return TSeries(vs, tuple(E))


def plog(f: TSeries) -> TSeries:
    _require_const(f, 1, "plog")
    L = series_log(f)
    vs = f.varset
    out = [FactoredRat.const(vs, 0)]
    for r in range(1, f.order + 1):
        acc = []
        for k in range(1, r + 1):
            if r % k:
                continue
            mk = mobius(k)
            if mk:
                acc.append(L[r // k].frobenius(k).scale(Fraction(mk, k)))
        out.append(rf_sum(acc, vs))
    return TSeries(vs, tuple(out))


def pexp(g: TSeries) -> TSeries:
    _require_const(g, 0, "pexp")
    vs = g.varset
    acc = TSeries.zero(vs, g.order)
    for k in range(1, g.order + 1):
        acc = acc + g.frobenius(k).scale(Fraction(1, k))
    return series_exp(acc)
