"""Partition combinatorics: arms, legs, weights and the arm-leg product.

Cells are stored 1-based as (row, col); the column index c and row index r
used in weight generating functions are the 0-based ``col - 1`` and
``row - 1``.  Parts beyond the length of a partition count as 0, so arms
and legs are defined (and negative) for cells outside the diagram.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .algebra import LaurentPoly, VarSet


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition({list(self)})"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The i-th part (1-based), 0 beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> Partition:
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p >= j) for j in range(1, self[0] + 1))

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, p in enumerate(self, start=1):
            for j in range(1, p + 1):
                yield (i, j)

    def arm(self, cell: tuple[int, int]) -> int:
        i, j = cell
        return self.part(i) - j

    def leg(self, cell: tuple[int, int]) -> int:
        i, j = cell
        return self.conjugate().part(j) - i

    def arms_legs(self) -> list[tuple[int, int]]:
        """(arm, leg) for every cell of the diagram, row by row."""
        conj = self.conjugate()
        return [(self.part(i) - j, conj.part(j) - i) for i, j in self.cells()]

    def bracket(self) -> int:
        return sum(p * p for p in self.conjugate())


def gen_partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Partition(p) for p in _partitions(n, n)]


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def conjugate(mu: Partition) -> Partition:
    return Partition(mu).conjugate()


def bracket(mu: Partition) -> int:
    return Partition(mu).bracket()


def arm(lam: Partition, cell: tuple[int, int]) -> int:
    return Partition(lam).arm(cell)


def leg(lam: Partition, cell: tuple[int, int]) -> int:
    return Partition(lam).leg(cell)


def b_poly(mu: Partition, vs: VarSet) -> LaurentPoly:
    """Weight generating polynomial: sum over cells of z^c q^r."""
    return LaurentPoly.from_terms(
        vs, [(_vec(vs, q=i - 1, z=j - 1), 1) for i, j in Partition(mu).cells()]
    )


def b_star(mu: Partition, vs: VarSet) -> LaurentPoly:
    return LaurentPoly.from_terms(
        vs, [(_vec(vs, q=1 - i, z=1 - j), 1) for i, j in Partition(mu).cells()]
    )


def _vec(vs: VarSet, **exps: int) -> list[int]:
    v = [0] * vs.arity
    for name, e in exps.items():
        v[vs.index(name)] = e
    return v


def z_seq(mu: Partition, vs: VarSet, n: int | None = None) -> list[LaurentPoly]:
    """Monomials q^(i - n) z^(mu_i), i = 1..n, with n defaulting to l(mu).

    Taking n > l(mu) gives the padded sequence in which the trailing
    entries have mu_i = 0.
    """
    mu = Partition(mu)
    n = len(mu) if n is None else n
    if n < len(mu):
        raise ValueError("padding length shorter than the partition")
    return [LaurentPoly.monomial(vs, {"q": i - n, "z": mu.part(i)}) for i in range(1, n + 1)]


def n_mu(mu: Partition, u: LaurentPoly) -> LaurentPoly:
    """Arm-leg product prod over cells of (z^a - u q^(1+l)) (z^(a+1) - u^-1 q^l).

    `u` must be a monomial (a constant such as 1, a symbol, or alpha_k^-1).
    """
    vs = u.varset
    q = LaurentPoly.var(vs, "q")
    z = LaurentPoly.var(vs, "z")
    u_inv = u**-1
    out = LaurentPoly.one(vs)
    for a, l in Partition(mu).arms_legs():
        out = out * (z**a - u * q ** (1 + l)) * (z ** (a + 1) - u_inv * q**l)
    return out


def compositions(n: int) -> list[tuple[int, ...]]:
    """Ordered tuples of positive integers summing to n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return [()]
    return [(k,) + rest for k in range(1, n + 1) for rest in compositions(n - k)]
