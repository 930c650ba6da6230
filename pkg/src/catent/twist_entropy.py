"""Entropy of the composition T2 o T1 of two twists around d-spherical objects.

Everything here instantiates closed forms and bounds; nothing is computed
from cone decompositions. Slopes are exact ``Fraction`` values.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction

from .errors import GapConditionFails, InconsistentInput, MissingAmbientHypothesis
from .serre_entropy import EntropyValue

NEG_INF = -math.inf
POS_INF = math.inf


class PieceKind(str, Enum):
    EXACT = "exact"
    UPPER_BOUND_ZERO = "upper_bound_zero"
    EXACT_ZERO = "exact_zero"
    BAND = "band"


class SlopeStatus(str, Enum):
    EXACT = "exact"
    LOWER_BOUND_ZERO = "lower_bound_zero"  # the limit is >= 0
    UPPER_BOUND_ZERO = "upper_bound_zero"  # the limit is <= 0
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Slope:
    value: Fraction | None
    status: SlopeStatus

    @classmethod
    def exact(cls, v) -> "Slope":
        return cls(Fraction(v), SlopeStatus.EXACT)

    @property
    def is_exact(self) -> bool:
        return self.status is SlopeStatus.EXACT


UNKNOWN_SLOPE = Slope(None, SlopeStatus.UNKNOWN)


@dataclass(frozen=True)
class Piece:
    lo: float
    hi: float
    kind: PieceKind
    slope: Fraction | None = None
    lower_slope: Fraction | None = None
    upper_slope: Fraction | None = None
    upper_offset: EntropyValue | None = None

    def contains(self, t: float) -> bool:
        return self.lo <= t <= self.hi

    def bounds(self, t: float) -> tuple[float, float]:
        """(lower, upper) bounds on h_t implied by this piece alone."""
        if self.kind is PieceKind.EXACT:
            v = float(self.slope) * t
            return v, v
        if self.kind is PieceKind.EXACT_ZERO:
            return 0.0, 0.0
        if self.kind is PieceKind.UPPER_BOUND_ZERO:
            return NEG_INF, 0.0
        lower = NEG_INF if self.lower_slope is None else float(self.lower_slope) * t
        if self.upper_slope is None:
            upper = POS_INF
        else:
            upper = self.upper_offset.approx + float(self.upper_slope) * t
        return lower, upper

    @property
    def is_exact(self) -> bool:
        return self.kind in (PieceKind.EXACT, PieceKind.EXACT_ZERO)


@dataclass(frozen=True)
class EntropyProfile:
    pieces: tuple[Piece, ...]
    h0: EntropyValue
    tau_minus: Slope
    tau_plus: Slope

    def pieces_at(self, t: float) -> list[Piece]:
        return [p for p in self.pieces if p.contains(t)]

    def bounds(self, t: float) -> tuple[float, float, bool]:
        """Best (lower, upper, exact) information about h_t."""
        if t == 0:
            return self.h0.approx, self.h0.approx, True
        lo, hi = NEG_INF, POS_INF
        for p in self.pieces_at(t):
            a, b = p.bounds(t)
            lo, hi = max(lo, a), min(hi, b)
        exact = any(p.is_exact for p in self.pieces_at(t))
        return lo, hi, exact

    def validate(self) -> None:
        """Raise AssertionError unless the structural invariants hold."""
        ps = self.pieces
        assert ps, "empty profile"
        assert ps[0].lo == NEG_INF and ps[-1].hi == POS_INF
        for a, b in zip(ps, ps[1:]):
            assert a.hi == b.lo, "pieces must tile the line"
        for p in ps:
            assert p.lo < p.hi
        for p in self.pieces_at(0.0):
            lo, hi = p.bounds(0.0)
            if p.is_exact:
                assert lo == hi == 0.0 and self.h0.is_zero
            assert lo <= self.h0.approx <= hi + 1e-12


def _half_line(sign: int) -> tuple[float, float]:
    return (NEG_INF, 0.0) if sign < 0 else (0.0, POS_INF)


def _exact_where_nonneg(slope: Fraction) -> list[Piece]:
    """Exact slope*t where slope*t >= 0, an upper bound of 0 elsewhere."""
    out = []
    for sign in (-1, 1):
        lo, hi = _half_line(sign)
        if slope * sign >= 0:
            out.append(Piece(lo, hi, PieceKind.EXACT, slope=slope))
        else:
            out.append(Piece(lo, hi, PieceKind.UPPER_BOUND_ZERO))
    return out


def _taus_from_pieces(neg: Piece, pos: Piece) -> tuple[Slope, Slope]:
    def tau(p: Piece, nonpos_status: SlopeStatus) -> Slope:
        if p.kind is PieceKind.EXACT:
            return Slope.exact(p.slope)
        if p.kind is PieceKind.EXACT_ZERO:
            return Slope.exact(0)
        if p.kind is PieceKind.UPPER_BOUND_ZERO:
            return Slope(None, nonpos_status)
        return UNKNOWN_SLOPE

    # h_t <= 0 forces lim h_t/t >= 0 as t -> -inf and <= 0 as t -> +inf
    return tau(neg, SlopeStatus.LOWER_BOUND_ZERO), tau(pos, SlopeStatus.UPPER_BOUND_ZERO)


def h0_composition(dimV: int) -> EntropyValue:
    if dimV < 0:
        raise ValueError("dim V must be nonnegative")
    if dimV <= 2:
        return EntropyValue.zero()
    return EntropyValue.quadratic(dimV)


def asymptotic_slopes(dimV: int, d: int, w: int) -> tuple[Slope, Slope]:
    """Limits of h_t / t as t -> -inf and t -> +inf."""
    if dimV < 2:
        raise ValueError("asymptotic slopes are only available for dim V >= 2")
    if d + w >= 2:
        tau_minus = Slope.exact(2 - (d + w))
    else:
        tau_minus = Slope(None, SlopeStatus.LOWER_BOUND_ZERO)
    if d - w <= 2:
        tau_plus = Slope.exact(2 - (d - w))
    else:
        tau_plus = Slope(None, SlopeStatus.UPPER_BOUND_ZERO)
    return tau_minus, tau_plus


def regime_case(d: int, w: int) -> int:
    """Which of the four (d + w, d - w) cases applies when dim V = 2."""
    if d + w >= 2:
        return 1 if d - w > 2 else 2
    return 3 if d - w > 2 else 4


def _band(sign: int, tau: Slope, h0: EntropyValue) -> Piece:
    lo, hi = _half_line(sign)
    if tau.is_exact:
        return Piece(lo, hi, PieceKind.BAND, lower_slope=tau.value, upper_slope=tau.value, upper_offset=h0)
    if tau.status in (SlopeStatus.LOWER_BOUND_ZERO, SlopeStatus.UPPER_BOUND_ZERO):
        # sign(tau) = -sign(t) on this side, so h0 + tau*t <= h0
        return Piece(lo, hi, PieceKind.BAND, upper_slope=Fraction(0), upper_offset=h0)
    return Piece(lo, hi, PieceKind.BAND, upper_offset=h0)


def _with_orthogonal(profile: EntropyProfile) -> EntropyProfile:
    pieces = tuple(
        replace(p, kind=PieceKind.EXACT_ZERO) if p.kind is PieceKind.UPPER_BOUND_ZERO else p
        for p in profile.pieces
    )
    tm, tp = profile.tau_minus, profile.tau_plus
    if profile.pieces[0].kind is PieceKind.UPPER_BOUND_ZERO:
        tm = Slope.exact(0)
    if profile.pieces[-1].kind is PieceKind.UPPER_BOUND_ZERO:
        tp = Slope.exact(0)
    return EntropyProfile(pieces, profile.h0, tm, tp)


def entropy_profile(
    dimV: int,
    d: int,
    w: int = 0,
    orthogonal_nonempty: bool = False,
    ambient_smooth_proper: bool = False,
) -> EntropyProfile:
    """Piecewise description of t -> h_t(T2 o T1).

    ``w`` is max V - min V. ``orthogonal_nonempty`` says the common
    orthogonal of E1 and E2 is nonzero; ``ambient_smooth_proper`` says the
    ambient category is perfect modules over a smooth compact dg algebra.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if dimV < 0 or w < 0:
        raise ValueError("dim V and w must be nonnegative")
    if dimV <= 1 and w != 0:
        raise InconsistentInput(f"dim V = {dimV} forces w = 0, got w = {w}")
    if dimV >= 2 and w == d:
        raise GapConditionFails(f"the extreme degrees of V differ by d = {d}")

    h0 = h0_composition(dimV)
    if dimV <= 2 and w == 0:
        slope = {0: Fraction(1 - d), 1: Fraction(4, 3) - d, 2: Fraction(2 - d)}[dimV]
        neg, pos = _exact_where_nonneg(slope)
        tm, tp = _taus_from_pieces(neg, pos)
        profile = EntropyProfile((neg, pos), h0, tm, tp)
    elif dimV == 2:
        if not ambient_smooth_proper:
            raise MissingAmbientHypothesis("dim V = 2 with w > 0 needs a smooth compact ambient")
        tm, tp = asymptotic_slopes(dimV, d, w)
        neg_lo, neg_hi = _half_line(-1)
        pos_lo, pos_hi = _half_line(1)
        neg = (
            Piece(neg_lo, neg_hi, PieceKind.EXACT, slope=tm.value)
            if tm.is_exact
            else Piece(neg_lo, neg_hi, PieceKind.UPPER_BOUND_ZERO)
        )
        pos = (
            Piece(pos_lo, pos_hi, PieceKind.EXACT, slope=tp.value)
            if tp.is_exact
            else Piece(pos_lo, pos_hi, PieceKind.UPPER_BOUND_ZERO)
        )
        profile = EntropyProfile((neg, pos), h0, tm, tp)
    else:
        if ambient_smooth_proper:
            tm, tp = asymptotic_slopes(dimV, d, w)
        else:
            tm = tp = UNKNOWN_SLOPE
        profile = EntropyProfile((_band(-1, tm, h0), _band(1, tp, h0)), h0, tm, tp)

    if orthogonal_nonempty:
        profile = _with_orthogonal(profile)
    return profile


def spherical_twist_profile(d: int, orthogonal_nonempty: bool = False) -> EntropyProfile:
    """Profile of a single twist T_E around a d-spherical object."""
    if d < 1:
        raise ValueError("d must be >= 1")
    slope = Fraction(1 - d)
    neg = Piece(NEG_INF, 0.0, PieceKind.EXACT, slope=slope)
    if orthogonal_nonempty or d == 1:
        pos = Piece(0.0, POS_INF, PieceKind.EXACT_ZERO)
        tp = Slope.exact(0)
    else:
        pos = Piece(0.0, POS_INF, PieceKind.BAND, lower_slope=slope, upper_slope=Fraction(0),
                    upper_offset=EntropyValue.zero())
        tp = Slope(None, SlopeStatus.UPPER_BOUND_ZERO)
    return EntropyProfile((neg, pos), EntropyValue.zero(), Slope.exact(slope), tp)
