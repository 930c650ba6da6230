"""Exact rational linear algebra on sparse matrices, backed by sympy's DomainMatrix."""
from __future__ import annotations

from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

SparseMatrix = dict  # {(row, col): Fraction}


def _to_dm(entries: SparseMatrix, nrows: int, ncols: int) -> DomainMatrix:
    rows: dict = {}
    for (r, c), x in entries.items():
        if x:
            rows.setdefault(r, {})[c] = QQ(x.numerator, x.denominator)
    return DomainMatrix(rows, (nrows, ncols), QQ)


def _frac(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def rank(entries: SparseMatrix, nrows: int, ncols: int) -> int:
    if not nrows or not ncols or not entries:
        return 0
    return _to_dm(entries, nrows, ncols).rank()


def nullspace(entries: SparseMatrix, nrows: int, ncols: int) -> list[dict]:
    """Basis of the kernel, each vector as {col: Fraction}."""
    if not ncols:
        return []
    if not nrows or not entries:
        return [{c: Fraction(1)} for c in range(ncols)]
    ns = _to_dm(entries, nrows, ncols).nullspace().to_sdm()
    return [{c: _frac(x) for c, x in row.items()} for _, row in sorted(ns.items())]


def complement(span: list[dict], candidates: list[dict], dim: int) -> list[dict]:
    """Candidates that extend a basis of span(span) to span(span + candidates), greedily."""
    if not candidates:
        return []
    cols = span + candidates
    entries = {(r, c): x for c, vec in enumerate(cols) for r, x in vec.items()}
    _, pivots = _to_dm(entries, dim, len(cols)).rref()
    return [candidates[p - len(span)] for p in pivots if p >= len(span)]
