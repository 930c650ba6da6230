"""Sparse integer Laurent polynomials in one and two variables.

Coefficients are Python ints, so dimension counts never overflow. Zero
coefficients are pruned on construction, which makes ``==`` a structural
comparison of the coefficient mappings.
"""
from __future__ import annotations

import re
from collections import defaultdict
from typing import Iterable, Mapping


def _prune(items: Iterable[tuple]) -> dict:
    acc: dict = defaultdict(int)
    for exp, c in items:
        acc[exp] += c
    return {e: c for e, c in acc.items() if c != 0}


class _Laurent:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping | None = None):
        self._coeffs = _prune((coeffs or {}).items())

    @classmethod
    def _raw(cls, coeffs: dict):
        obj = cls.__new__(cls)
        obj._coeffs = coeffs
        return obj

    @property
    def coeffs(self) -> dict:
        return dict(self._coeffs)

    def __iter__(self):
        return iter(sorted(self._coeffs.items()))

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = type(self).constant(other)
        if type(other) is not type(self):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash((type(self).__name__, frozenset(self._coeffs.items())))

    def __add__(self, other):
        if isinstance(other, int):
            other = type(self).constant(other)
        return type(self)._raw(_prune(list(self._coeffs.items()) + list(other._coeffs.items())))

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return type(self)._raw(_prune((e, c * other) for e, c in self._coeffs.items()))
        if type(other) is not type(self):
            return NotImplemented
        return type(self)._raw(
            _prune(
                (self._add_exp(e1, e2), c1 * c2)
                for e1, c1 in self._coeffs.items()
                for e2, c2 in other._coeffs.items()
            )
        )

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are only defined for monomials")
        result = type(self).constant(1)
        for _ in range(k):
            result = result * self
        return result

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"


class Laurent1(_Laurent):
    """Element of Z[q, q^-1], stored as {exponent: coefficient}."""

    @staticmethod
    def _add_exp(a, b):
        return a + b

    @classmethod
    def constant(cls, c: int) -> "Laurent1":
        return cls({0: c})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "Laurent1":
        return cls({exp: coeff})

    def coefficient(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    def support(self) -> list[int]:
        return sorted(self._coeffs)

    def shift(self, s: int) -> "Laurent1":
        """Multiply by q^s."""
        return Laurent1._raw({e + s: c for e, c in self._coeffs.items()})

    def __call__(self, x: int) -> int:
        return evaluate_int(self, x)

    def __str__(self):
        return _render(sorted(self._coeffs.items()), _mono1)


class Laurent2(_Laurent):
    """Element of Z[q1^{±1}, q2^{±1}], stored as {(e1, e2): coefficient}."""

    @staticmethod
    def _add_exp(a, b):
        return (a[0] + b[0], a[1] + b[1])

    @classmethod
    def constant(cls, c: int) -> "Laurent2":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, e1: int, e2: int, coeff: int = 1) -> "Laurent2":
        return cls({(e1, e2): coeff})

    def coefficient(self, e1: int, e2: int) -> int:
        return self._coeffs.get((e1, e2), 0)

    def __str__(self):
        return _render(sorted(self._coeffs.items()), _mono2)


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}"


def _mono1(e) -> str:
    return _power("q", e)


def _mono2(e) -> str:
    return "*".join(p for p in (_power("q1", e[0]), _power("q2", e[1])) if p)


def _render(items, mono) -> str:
    if not items:
        return "0"
    out = []
    for exp, c in items:
        m = mono(exp)
        mag = abs(c)
        if not m:
            term = str(mag)
        elif mag == 1:
            term = m
        else:
            term = f"{mag}{m}"
        if not out:
            out.append(term if c > 0 else f"-{term}")
        else:
            out.append(("+ " if c > 0 else "- ") + term)
    return " ".join(out)


def lp_mul(p: Laurent2, q: Laurent2) -> Laurent2:
    return p * q


def specialize_cy(p: Laurent2, d: int) -> Laurent1:
    """Substitute q1 -> q, q2 -> q^d."""
    return Laurent1._raw(_prune((e1 + d * e2, c) for (e1, e2), c in p._coeffs.items()))


def evaluate_int(p: Laurent1, x: int) -> int:
    """Evaluate at x = 1 (total dimension) or x = -1 (Euler characteristic)."""
    if x == 1:
        return sum(p._coeffs.values())
    if x == -1:
        return sum(c if e % 2 == 0 else -c for e, c in p._coeffs.items())
    raise ValueError(f"evaluation is only defined at x = 1 or x = -1, got {x}")


def parse_laurent1(text: str) -> Laurent1:
    """Inverse of ``str`` for Laurent1, e.g. ``"q^-1 + 2 + q^3"``."""
    s = text.replace(" ", "")
    if s in ("", "0"):
        return Laurent1()
    coeffs: dict = defaultdict(int)
    for term in re.split(r"(?<!\^)(?=[+-])", s):
        if not term:
            continue
        m = re.fullmatch(r"([+-]?)(\d*)(q(?:\^(-?\d+))?)?", term)
        if not m or (not m.group(2) and not m.group(3)):
            raise ValueError(f"cannot parse Laurent term {term!r} in {text!r}")
        c = int(m.group(2)) if m.group(2) else 1
        e = (int(m.group(4)) if m.group(4) is not None else 1) if m.group(3) else 0
        coeffs[e] += -c if m.group(1) == "-" else c
    return Laurent1(coeffs)
