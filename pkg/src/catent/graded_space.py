"""Dimension bookkeeping for graded vector spaces such as V = Hom^*(E2, E1).

Shift convention: ``shift(V, n)`` is V[n], with V[n]^p = V^{p+n}. The
support moves down by n, so max V[n] = max V - n.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Mapping

from .errors import GapConditionFails
from .laurent_poly import Laurent1


class GradedDim:
    """Finitely supported map degree -> positive dimension."""

    __slots__ = ("_dims",)

    def __init__(self, dims: Mapping[int, int] | None = None):
        clean = {}
        for deg, dim in (dims or {}).items():
            if dim < 0:
                raise ValueError(f"negative dimension {dim} in degree {deg}")
            if dim:
                clean[int(deg)] = int(dim)
        self._dims = dict(sorted(clean.items()))

    @classmethod
    def from_poincare(cls, p: Laurent1) -> "GradedDim":
        return cls(p.coeffs)

    def poincare(self) -> Laurent1:
        return Laurent1(self._dims)

    @property
    def dims(self) -> dict:
        return dict(self._dims)

    def __getitem__(self, deg: int) -> int:
        return self._dims.get(deg, 0)

    def __eq__(self, other):
        if isinstance(other, Mapping):
            other = GradedDim(other)
        if not isinstance(other, GradedDim):
            return NotImplemented
        return self._dims == other._dims

    def __hash__(self):
        return hash(tuple(self._dims.items()))

    def __bool__(self):
        return bool(self._dims)

    def support(self) -> list[int]:
        return list(self._dims)

    @property
    def total(self) -> int:
        return sum(self._dims.values())

    @property
    def min_deg(self) -> int:
        return min(self._dims)

    @property
    def max_deg(self) -> int:
        return max(self._dims)

    @property
    def width(self) -> int:
        return self.max_deg - self.min_deg if self._dims else 0

    def euler(self) -> int:
        return sum(d if p % 2 == 0 else -d for p, d in self._dims.items())

    def __str__(self):
        return "{" + ", ".join(f"{p}:{d}" for p, d in self._dims.items()) + "}"

    def __repr__(self):
        return f"GradedDim({self._dims})"


def convolve(a: GradedDim, b: GradedDim) -> GradedDim:
    """Graded dimensions of a tensor product."""
    out: dict = {}
    for (p, x), (q, y) in product(a.dims.items(), b.dims.items()):
        out[p + q] = out.get(p + q, 0) + x * y
    return GradedDim(out)


def hom_dims(V: GradedDim, W: GradedDim) -> GradedDim:
    """Graded dimensions of Hom^*(V, W) = V* (x) W."""
    out: dict = {}
    for (p, x), (q, y) in product(V.dims.items(), W.dims.items()):
        out[q - p] = out.get(q - p, 0) + x * y
    return GradedDim(out)


def gap_check(V: GradedDim, d: int) -> bool:
    """True iff Hom(V, V[d]) = 0, i.e. no two support degrees differ by d."""
    supp = set(V.support())
    return not any(p + d in supp for p in supp)


@dataclass(frozen=True)
class VanishingFlags:
    top: bool  # V^{1+d} = 0
    dual: bool  # (V*)^d = 0
    gap: bool  # (V (x) V*)^d = 0
    triple: bool  # (V* (x) V (x) V)^d = 0

    @property
    def all(self) -> bool:
        return self.top and self.dual and self.gap and self.triple


def lemma_vanishing_check(V: GradedDim, d: int) -> VanishingFlags:
    supp = V.support()
    s = set(supp)
    return VanishingFlags(
        top=(1 + d) not in s,
        dual=(-d) not in s,
        gap=gap_check(V, d),
        triple=not any(y + z - x == d for x, y, z in product(supp, repeat=3)),
    )


def shift(V: GradedDim, n: int) -> GradedDim:
    return GradedDim({p - n: dim for p, dim in V.dims.items()})


def find_shift(V: GradedDim, d: int) -> int:
    """Smallest n >= 0 such that V[n] passes all four vanishing checks."""
    if not gap_check(V, d):
        raise GapConditionFails(f"V = {V} has two degrees differing by d = {d}")
    if not V:
        return 0
    bound = 2 * V.max_deg - V.min_deg + d + 1
    for n in range(max(bound, 0) + 1):
        if lemma_vanishing_check(shift(V, n), d).all:
            return n
    raise AssertionError("unreachable: the vanishing conditions hold past the bound")
