"""Euler pairing, induced twist action on K_num, and the Kikuta-Takahashi test.

Matrices are plain nested lists of ints, indexed [row][col], acting on
column vectors. Basis order is ([E1], [E2]).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .serre_entropy import EntropyValue
from .twist_entropy import h0_composition

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def matvec(a: Matrix, v: list[int]) -> list[int]:
    return [sum(r * x for r, x in zip(row, v)) for row in a]


def det2(a: Matrix) -> int:
    return a[0][0] * a[1][1] - a[0][1] * a[1][0]


@dataclass(frozen=True)
class EulerLattice:
    """Gram matrix gram[i][j] = chi(basis_i, basis_j)."""

    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "gram", tuple(tuple(int(x) for x in row) for row in self.gram))
        if any(len(row) != len(self.gram) for row in self.gram):
            raise ValueError("Gram matrix must be square")

    @property
    def rank(self) -> int:
        return len(self.gram)

    @classmethod
    def spherical_pair(cls, lam: int, d: int) -> "EulerLattice":
        """Rank-2 lattice of two d-spherical classes with chi([E2],[E1]) = lam."""
        diag = 1 + (-1) ** d
        return cls(((diag, (-1) ** d * lam), (lam, diag)))

    def pairing(self, u: list[int], v: list[int]) -> int:
        return sum(u[i] * self.gram[i][j] * v[j] for i in range(self.rank) for j in range(self.rank))

    def is_spherical(self, i: int, d: int) -> bool:
        return self.gram[i][i] == 1 + (-1) ** d

    def is_serre_symmetric(self, d: int) -> bool:
        """gram[i][j] == (-1)^d gram[j][i] for all i, j."""
        s = (-1) ** d
        return all(self.gram[i][j] == s * self.gram[j][i] for i in range(self.rank) for j in range(self.rank))


def twist_matrix(lattice: EulerLattice, i: int, inverse: bool = False) -> Matrix:
    """Matrix of [T_i](v) = v - chi(e_i, v) e_i, or of [T_i^{-1}](v) = v - chi(v, e_i) e_i."""
    n = lattice.rank
    if not 0 <= i < n:
        raise IndexError(f"basis index {i} out of range for rank {n}")
    m = identity(n)
    for j in range(n):
        m[i][j] -= lattice.gram[j][i] if inverse else lattice.gram[i][j]
    return m


def composition_matrix(lam: int, d: int) -> Matrix:
    """[T2 o T1] on span([E1], [E2])."""
    s = (-1) ** (1 - d)
    return [[s, s * lam], [-s * lam, s * (1 - lam * lam)]]


def log_spectral_radius(lam: int) -> EntropyValue:
    # det = 1: |lam| <= 2 gives unit-modulus eigenvalues
    if abs(lam) <= 2:
        return EntropyValue.zero()
    return EntropyValue.quadratic(lam)


class Verdict(str, Enum):
    EQUAL = "Equal"
    STRICT_GAP = "StrictGap"
    HYPOTHESIS_VIOLATED = "HypothesisViolated"


@dataclass(frozen=True)
class KTReport:
    dimV: int
    lam: int
    d: int
    h0: EntropyValue
    log_rho: EntropyValue
    verdict: Verdict
    violated_hypotheses: tuple[str, ...] = ()
    # |chi| <= dim V with matching parity; False means no (E1, E2) realizes the input
    realizable: bool = field(default=True)

    def to_dict(self) -> dict:
        return {
            "dimV": self.dimV,
            "lambda": self.lam,
            "d": self.d,
            "h0": self.h0,
            "log_rho": self.log_rho,
            "verdict": self.verdict.value,
            "violated_hypotheses": list(self.violated_hypotheses),
            "realizable": self.realizable,
        }


def kt_verdict(dimV: int, lam: int, d: int, classes_independent: bool = True) -> KTReport:
    """Compare h0(T2 o T1) with log rho([T2 o T1]) given dim V and lam = chi([E2],[E1])."""
    if d < 1:
        raise ValueError("d must be >= 1")
    if dimV < 0:
        raise ValueError("dim V must be nonnegative")
    violated = []
    if not classes_independent:
        violated.append("classes_not_independent")
    if d % 2 == 0 and abs(lam) == 2:
        violated.append("chi_is_pm2_for_even_d")
    if d % 2 == 1 and lam == 0:
        violated.append("chi_is_zero_for_odd_d")
    h0 = h0_composition(dimV)
    log_rho = log_spectral_radius(lam)
    if violated:
        verdict = Verdict.HYPOTHESIS_VIOLATED
    elif dimV <= 2 or abs(lam) == dimV:
        verdict = Verdict.EQUAL
    else:
        verdict = Verdict.STRICT_GAP
    realizable = abs(lam) <= dimV and (dimV - lam) % 2 == 0
    return KTReport(dimV, lam, d, h0, log_rho, verdict, tuple(violated), realizable)


def torelli_check(lam: int, d: int) -> bool:
    """True iff composition_matrix(lam, d) cubed is the identity."""
    a = composition_matrix(lam, d)
    return matmul(matmul(a, a), a) == identity(2)
