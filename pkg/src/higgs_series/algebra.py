"""Sparse multivariate Laurent polynomials with exact rational coefficients.

Monomials are packed into a single Python integer: the exponent of the
i-th variable occupies a signed 64-bit field, with the first variable of
the :class:`VarSet` in the most significant position.  With this layout
monomial multiplication is integer addition and comparison of packed keys
coincides with lexicographic comparison of exponent vectors, so the
canonical term order costs nothing.

Exponents entering the ring (construction, Frobenius, substitution) are
limited to signed 32 bits; the 64-bit fields leave headroom for the sums
produced by multiplication.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Sequence, Union

FIELD_BITS = 64
_FULL = 1 << FIELD_BITS
_HALF = 1 << (FIELD_BITS - 1)
_MASK = _FULL - 1
EXP_LIMIT = (1 << 31) - 1

Coef = Union[int, Fraction]


class NotDivisible(ArithmeticError):
    """Raised by exact division when the divisor does not divide."""


class VarSetMismatch(ValueError):
    pass


@dataclass(frozen=True)
class VarSet:
    """An ordered, immutable tuple of variable names.

    The standard layout is ``q, z, [u], a1..ag, [z1..zn]``; the optional
    groups are only allocated when a computation needs them.
    """

    names: tuple[str, ...]
    genus: int = 0

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")

    @classmethod
    def standard(cls, g: int, *, u: bool = False, n_formal: int = 0) -> VarSet:
        if g < 0 or n_formal < 0:
            raise ValueError("genus and formal variable count must be >= 0")
        names = ["q", "z"]
        if u:
            names.append("u")
        names += [f"a{i}" for i in range(1, g + 1)]
        names += [f"z{i}" for i in range(1, n_formal + 1)]
        return cls(tuple(names), g)

    @property
    def arity(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"variable {name!r} not in {self.names}") from None

    def __contains__(self, name: str) -> bool:
        return name in self.names

    def alphas(self) -> list[str]:
        return [f"a{i}" for i in range(1, self.genus + 1)]

    def formals(self) -> list[str]:
        return [n for n in self.names if n.startswith("z") and n[1:].isdigit()]


def pack(exps: Sequence[int]) -> int:
    key = 0
    for e in exps:
        if not -EXP_LIMIT <= e <= EXP_LIMIT:
            raise OverflowError(f"exponent {e} outside the signed 32-bit range")
        key = (key << FIELD_BITS) + e
    return key


def unpack(key: int, n: int) -> tuple[int, ...]:
    out = [0] * n
    for i in range(n - 1, -1, -1):
        e = key & _MASK
        if e >= _HALF:
            e -= _FULL
        out[i] = e
        key = (key - e) >> FIELD_BITS
    return tuple(out)


def _norm(c: Coef) -> Coef:
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _to_coef(c) -> Coef:
    if isinstance(c, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return _norm(c)
    if isinstance(c, Rational):
        return _norm(Fraction(c.numerator, c.denominator))
    if isinstance(c, str):
        return _norm(Fraction(c))
    raise TypeError(f"cannot use {type(c).__name__} as an exact coefficient")


def _clean(acc: dict[int, Coef]) -> dict[int, Coef]:
    return {k: _norm(c) for k, c in acc.items() if c}


class LaurentPoly:
    """Immutable sparse Laurent polynomial over a :class:`VarSet`."""

    __slots__ = ("varset", "_terms", "_hash")

    def __init__(self, varset: VarSet, terms: Mapping[int, Coef] | None = None):
        # `terms` maps packed keys to nonzero coefficients; callers that
        # cannot guarantee that go through `from_terms`.
        self.varset = varset
        self._terms: dict[int, Coef] = dict(terms) if terms else {}
        self._hash = None

    # -- construction -----------------------------------------------------
    @classmethod
    def zero(cls, vs: VarSet) -> LaurentPoly:
        return cls(vs)

    @classmethod
    def const(cls, vs: VarSet, c) -> LaurentPoly:
        c = _to_coef(c)
        return cls(vs, {0: c} if c else None)

    @classmethod
    def one(cls, vs: VarSet) -> LaurentPoly:
        return cls(vs, {0: 1})

    @classmethod
    def monomial(cls, vs: VarSet, exps: Mapping[str, int] | Sequence[int] = (), coef=1) -> LaurentPoly:
        if isinstance(exps, Mapping):
            vec = [0] * vs.arity
            for name, e in exps.items():
                vec[vs.index(name)] += e
        else:
            vec = list(exps) + [0] * (vs.arity - len(exps))
            if len(vec) != vs.arity:
                raise ValueError("exponent vector longer than the varset")
        c = _to_coef(coef)
        return cls(vs, {pack(vec): c} if c else None)

    @classmethod
    def var(cls, vs: VarSet, name: str, power: int = 1) -> LaurentPoly:
        return cls.monomial(vs, {name: power})

    @classmethod
    def from_terms(cls, vs: VarSet, terms: Iterable[tuple[Sequence[int], object]]) -> LaurentPoly:
        acc: dict[int, Coef] = {}
        for exps, c in terms:
            if len(exps) != vs.arity:
                raise ValueError("exponent vector has the wrong length")
            k = pack(exps)
            acc[k] = acc.get(k, 0) + _to_coef(c)
        return cls(vs, _clean(acc))

    # -- inspection -------------------------------------------------------
    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_one(self) -> bool:
        return self._terms == {0: 1}

    def constant_value(self) -> Coef | None:
        """The coefficient if the polynomial is a constant, else None."""
        if not self._terms:
            return 0
        if len(self._terms) == 1 and 0 in self._terms:
            return self._terms[0]
        return None

    def keys(self) -> list[int]:
        """Packed monomial keys in canonical (descending lex) order."""
        return sorted(self._terms, reverse=True)

    def terms(self) -> Iterator[tuple[tuple[int, ...], Coef]]:
        n = self.varset.arity
        for k in self.keys():
            yield unpack(k, n), self._terms[k]

    def raw_items(self):
        return self._terms.items()

    def coefficient(self, exps: Mapping[str, int] | Sequence[int]) -> Coef:
        m = LaurentPoly.monomial(self.varset, exps)
        (k,) = m._terms
        return self._terms.get(k, 0)

    def leading(self) -> tuple[int, Coef]:
        k = max(self._terms)
        return k, self._terms[k]

    def extents(self) -> list[tuple[int, int]]:
        """Per-variable (min, max) exponent over all terms."""
        n = self.varset.arity
        if not self._terms:
            return [(0, 0)] * n
        lo = [EXP_LIMIT * 4] * n
        hi = [-EXP_LIMIT * 4] * n
        for k in self._terms:
            for i, e in enumerate(unpack(k, n)):
                if e < lo[i]:
                    lo[i] = e
                if e > hi[i]:
                    hi[i] = e
        return list(zip(lo, hi))

    def variables(self) -> set[str]:
        """Names of variables appearing with a nonzero exponent."""
        used = set()
        for i, (lo, hi) in enumerate(self.extents()):
            if lo or hi:
                used.add(self.varset.names[i])
        return used

    def degree(self, name: str) -> tuple[int, int]:
        return self.extents()[self.varset.index(name)]

    # -- equality / hashing ----------------------------------------------
    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.varset == other.varset and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.varset.names, frozenset(self._terms.items())))
        return self._hash

    def sort_key(self) -> tuple:
        """Deterministic total order used to sort factor lists."""
        ks = self.keys()
        return (len(ks), tuple((k, self._terms[k]) for k in ks))

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            if other.varset != self.varset:
                raise VarSetMismatch(f"{self.varset.names} vs {other.varset.names}")
            return other
        return LaurentPoly.const(self.varset, other)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            a, b = other._terms, self._terms
        else:
            a, b = self._terms, other._terms
        acc = dict(a)
        for k, c in b.items():
            s = acc.get(k, 0) + c
            if s:
                acc[k] = _norm(s)
            else:
                acc.pop(k, None)
        return LaurentPoly(self.varset, acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.varset, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> LaurentPoly:
        c = _to_coef(c)
        if not c:
            return LaurentPoly(self.varset)
        return LaurentPoly(self.varset, {k: _norm(v * c) for k, v in self._terms.items()})

    def shift(self, key: int, c: Coef = 1) -> LaurentPoly:
        """Multiply by the monomial with packed key `key` (times `c`)."""
        return LaurentPoly(self.varset, {k + key: _norm(v * c) for k, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        other = self._coerce(other)
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        if len(a) == 1:
            ((ka, ca),) = a.items()
            return LaurentPoly(self.varset, {ka + kb: _norm(ca * cb) for kb, cb in b.items()})
        acc: dict[int, Coef] = {}
        get = acc.get
        for ka, ca in a.items():
            for kb, cb in b.items():
                k = ka + kb
                acc[k] = get(k, 0) + ca * cb
        return LaurentPoly(self.varset, _clean(acc))

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have Laurent inverses")
            ((k, c),) = self._terms.items()
            inv = LaurentPoly(self.varset, {-k: _norm(Fraction(1) / c)})
            return inv ** (-n)
        if n > 1 and any(max(-lo, hi) * n > EXP_LIMIT for lo, hi in self.extents()):
            raise OverflowError(f"power {n} pushes an exponent past 32 bits")
        result = LaurentPoly.one(self.varset)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def exact_div(self, d: LaurentPoly) -> LaurentPoly:
        """Quotient of exact division in the Laurent ring.

        Leading-term elimination under the canonical order.  Because the
        quotient's exponent in every variable must lie between the
        difference of minima and the difference of maxima, a candidate
        quotient term outside that box proves non-divisibility and also
        guarantees termination.
        """
        d = self._coerce(d)
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self
        if d.is_monomial():
            ((k, c),) = d._terms.items()
            inv = Fraction(1) / c
            return LaurentPoly(self.varset, {kk - k: _norm(v * inv) for kk, v in self._terms.items()})
        n = self.varset.arity
        ext_n, ext_d = self.extents(), d.extents()
        lo = [a[0] - b[0] for a, b in zip(ext_n, ext_d)]
        hi = [a[1] - b[1] for a, b in zip(ext_n, ext_d)]
        if any(l > h for l, h in zip(lo, hi)):
            raise NotDivisible("degree box is empty")
        dk = d.keys()
        lead_k = dk[0]
        lead_inv = Fraction(1) / d._terms[lead_k]
        rest = [(k - lead_k, d._terms[k]) for k in dk[1:]]
        rem = dict(self._terms)
        heap = [-k for k in rem]
        heapq.heapify(heap)
        quot: dict[int, Coef] = {}
        while rem:
            k = -heapq.heappop(heap)
            c = rem.pop(k, None)
            if c is None:
                continue
            m = k - lead_k
            for i, e in enumerate(unpack(m, n)):
                if e < lo[i] or e > hi[i]:
                    raise NotDivisible("quotient term leaves the degree box")
            t = _norm(c * lead_inv)
            quot[m] = t
            for off, dc in rest:
                kk = k + off
                old = rem.get(kk)
                if old is None:
                    rem[kk] = -t * dc
                    heapq.heappush(heap, -kk)
                else:
                    s = old - t * dc
                    if s:
                        rem[kk] = s
                    else:
                        del rem[kk]
        return LaurentPoly(self.varset, _clean(quot))

    def try_div(self, d: LaurentPoly) -> LaurentPoly | None:
        try:
            return self.exact_div(d)
        except NotDivisible:
            return None

    # -- ring maps --------------------------------------------------------
    def frobenius(self, k: int) -> LaurentPoly:
        """Adams operation: every variable v is sent to v**k."""
        if k < 1:
            raise ValueError("Frobenius index must be >= 1")
        if k == 1:
            return self
        for lo, hi in self.extents():
            if max(-lo, hi) * k > EXP_LIMIT:
                raise OverflowError("Frobenius pushes an exponent past 32 bits")
        return LaurentPoly(self.varset, {key * k: c for key, c in self._terms.items()})

    def specialize(self, bindings: Mapping[str, object], target: VarSet | None = None) -> LaurentPoly:
        """Simultaneous substitution of variables by monomials or constants.

        Values are single-term LaurentPolys over `target` (default: the same
        varset) or rational constants.  Unbound variables keep their name and
        must exist in `target` if they occur.
        """
        target = target or self.varset
        src = self.varset
        images: list[tuple[Coef, tuple[int, ...]] | None] = []
        zero_vec = (0,) * target.arity
        for name in src.names:
            if name in bindings:
                val = bindings[name]
                if isinstance(val, LaurentPoly):
                    if val.varset != target:
                        raise VarSetMismatch("binding lives in a different varset")
                    if val.is_zero():
                        images.append((0, zero_vec))
                        continue
                    if not val.is_monomial():
                        raise ValueError(f"binding for {name} is not a monomial")
                    ((k, c),) = val._terms.items()
                    images.append((c, unpack(k, target.arity)))
                else:
                    images.append((_to_coef(val), zero_vec))
            elif name in target:
                vec = [0] * target.arity
                vec[target.index(name)] = 1
                images.append((1, tuple(vec)))
            else:
                images.append(None)
        acc: dict[int, Coef] = {}
        for key, c in self._terms.items():
            exps = unpack(key, src.arity)
            coef: Coef = c
            vec = [0] * target.arity
            for name, e, img in zip(src.names, exps, images):
                if not e:
                    continue
                if img is None:
                    raise ValueError(f"variable {name} has no image in the target varset")
                ic, iv = img
                if ic == 0:
                    if e < 0:
                        raise ZeroDivisionError(f"negative power of {name} sent to 0")
                    coef = 0
                    break
                if ic != 1:
                    coef = coef * (Fraction(ic) ** e if e < 0 else ic**e)
                for j, x in enumerate(iv):
                    if x:
                        vec[j] += x * e
            if not coef:
                continue
            k = pack(vec)
            acc[k] = acc.get(k, 0) + coef
        return LaurentPoly(target, _clean(acc))

    def unit_and_primitive(self) -> tuple[Fraction, int, LaurentPoly]:
        """Split p = c * x^m * p0 with p0 having integer coprime coefficients,
        nonnegative exponents with minimum 0 in every variable, and positive
        leading coefficient.  Returns (c, packed m, p0)."""
        if self.is_zero():
            raise ValueError("zero has no primitive part")
        ext = self.extents()
        m = pack([lo for lo, _ in ext])
        den_lcm = 1
        for c in self._terms.values():
            if type(c) is Fraction:
                den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
        ints = {k - m: int(c * den_lcm) for k, c in self._terms.items()}
        g = 0
        for v in ints.values():
            g = math.gcd(g, v)
        lead = ints[max(ints)]
        if lead < 0:
            g = -g
        prim = LaurentPoly(self.varset, {k: v // g for k, v in ints.items()})
        return Fraction(g, den_lcm), m, prim

    # -- display / serialization -----------------------------------------
    def __repr__(self):
        return f"LaurentPoly({self.to_text(sep=' + ')!r})"

    def to_text(self, sep: str = "\n") -> str:
        return poly_to_text(self, sep)


def _display_name(name: str) -> str:
    if name.startswith("a") and name[1:].isdigit():
        return "α" + name[1:]
    return name


def poly_to_text(p: LaurentPoly, sep: str = "\n") -> str:
    if p.is_zero():
        return "0"
    lines = []
    for exps, c in p.terms():
        factors = []
        for name, e in zip(p.varset.names, exps):
            if e:
                factors.append(f"{_display_name(name)}^{e}")
        coef = str(Fraction(c))
        lines.append(coef + (" * " + " ".join(factors) if factors else ""))
    return sep.join(lines)


def poly_to_json(p: LaurentPoly) -> list[dict]:
    out = []
    for exps, c in p.terms():
        exp = {name: e for name, e in zip(p.varset.names, exps) if e}
        out.append({"exp": exp, "coef": str(Fraction(c))})
    return out


def poly_from_json(vs: VarSet, data: list[dict]) -> LaurentPoly:
    acc: dict[int, Coef] = {}
    for t in data:
        vec = [0] * vs.arity
        for name, e in t["exp"].items():
            vec[vs.index(name)] = int(e)
        k = pack(vec)
        acc[k] = acc.get(k, 0) + _to_coef(t["coef"])
    return LaurentPoly(vs, _clean(acc))


# operation-style aliases
def poly_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if a.varset != b.varset:
        raise VarSetMismatch("poly_add on different varsets")
    return a + b


def poly_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if a.varset != b.varset:
        raise VarSetMismatch("poly_mul on different varsets")
    return a * b


def poly_exact_div(n: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    return n.exact_div(d)


def frobenius(p: LaurentPoly, k: int) -> LaurentPoly:
    return p.frobenius(k)


def specialize(p: LaurentPoly, bindings: Mapping[str, object], target: VarSet | None = None) -> LaurentPoly:
    return p.specialize(bindings, target)
