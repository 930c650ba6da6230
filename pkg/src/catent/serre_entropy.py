"""Entropy at t = 0 of the Serre functor of the glued algebra k + k + W.

Only N = dim W matters. The total cohomology of the m-fold derived tensor
power of the dual bimodule is (2 + N) d_{2m-2}, where

    d_{m+2} + d_m = N d_{m+1},   d_{-1} = 0, d_0 = 1, d_1 = N.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import mpmath


def _log_value(a: int, b: int) -> float:
    with mpmath.workdps(30):
        return float(mpmath.log((mpmath.mpf(a) + mpmath.sqrt(mpmath.mpf(b))) / 2))


@dataclass(frozen=True)
class EntropyValue:
    """The number log((a + sqrt(b)) / 2); zero is (a, b) = (2, 0).

    Equality and hashing use the exact pair only.
    """

    a: int
    b: int
    approx: float = field(init=False, compare=False)

    def __post_init__(self):
        if self.b < 0:
            raise ValueError("b must be nonnegative")
        object.__setattr__(self, "approx", _log_value(self.a, self.b))

    @classmethod
    def zero(cls) -> "EntropyValue":
        return cls(2, 0)

    @classmethod
    def quadratic(cls, n: int) -> "EntropyValue":
        """log((n^2 - 2 + sqrt(n^4 - 4n^2)) / 2), the shared closed form for n >= 3."""
        return cls(n * n - 2, n**4 - 4 * n * n)

    @property
    def is_zero(self) -> bool:
        return self.a == 2 and self.b == 0

    def exact(self) -> str:
        return f"log(({self.a}+sqrt({self.b}))/2)"

    def __float__(self):
        return self.approx

    def __str__(self):
        return f"{self.exact()} ~ {self.approx:.12g}"


@dataclass(frozen=True)
class RecurrenceSolution:
    N: int
    sigma_plus: float
    sigma_minus: float
    alpha: float | None
    beta: float | None


def _check_dim(N: int) -> None:
    if N < 2:
        raise ValueError(f"dim W must be at least 2, got {N}")


def solve_recurrence(N: int) -> RecurrenceSolution:
    _check_dim(N)
    r = math.sqrt(N * N - 4)
    sp, sm = (N + r) / 2, (N - r) / 2
    if N == 2:
        return RecurrenceSolution(N, sp, sm, None, None)
    return RecurrenceSolution(N, sp, sm, 0.5 - N / (2 * r), 0.5 + N / (2 * r))


def recurrence_dims(N: int, m_max: int) -> list[int]:
    """Exact [d_{-1}, d_0, ..., d_{m_max}]."""
    _check_dim(N)
    if m_max < 0:
        raise ValueError("m_max must be >= 0")
    out = [0, 1]
    for _ in range(m_max):
        out.append(N * out[-1] - out[-2])
    return out


def closed_form_dim(N: int, m: int) -> float:
    if N < 3:
        raise ValueError("closed form needs N >= 3; for N = 2, d_m = m + 1")
    if m < -1:
        raise ValueError("m must be >= -1")
    s = solve_recurrence(N)
    return s.alpha * s.sigma_minus**m + s.beta * s.sigma_plus**m


def h0_serre(N: int) -> EntropyValue:
    _check_dim(N)
    if N == 2:
        return EntropyValue.zero()
    return EntropyValue.quadratic(N)


def total_cohom_dim(N: int, m: int) -> int:
    """Total dimension of the cohomology of the m-th tensor power of the dual bimodule."""
    _check_dim(N)
    if m < 1:
        raise ValueError("m must be >= 1")
    d = recurrence_dims(N, 2 * m - 1)
    # d[k + 1] is d_k
    return d[2 * m - 2 + 1] + d[2 * m - 3 + 1] + d[2 * m - 1 + 1] + d[2 * m - 2 + 1]


def log_dims(N: int, m_max: int) -> list[float]:
    """log d_0, ..., log d_{m_max}, iterated without forming d_m."""
    _check_dim(N)
    logs = [0.0, math.log(N)]
    for _ in range(m_max - 1):
        prev, cur = logs[-2], logs[-1]
        # d_{m+1} = d_m (N - d_{m-1} / d_m)
        logs.append(cur + math.log(N - math.exp(prev - cur)))
    return logs[: m_max + 1]


def entropy_estimate(N: int, m: int) -> float:
    """(1/m) log d_{2m-2}, which tends to h0_serre(N)."""
    return log_dims(N, 2 * m - 2)[2 * m - 2] / m
