"""Reachable spherical objects in the A2 Ginzburg d-Calabi-Yau category.

Objects are twisted complexes over the (formal) graded Ext algebra of
S1 + S2. A generator ``(i, s)`` stands for S_i[s]; a differential entry
``diff[(k, l)] = c`` is c times the unique basis element of
Hom^{1 + s_k - s_l}(S_{i_l}, S_{i_k}). Every (source, target, degree) slot
of the algebra holds at most one basis element, so scalars suffice.

Morphisms compose without Koszul signs; the shift functor negates the
differential, and Hom complexes carry D(f) = delta_Y f - (-1)^|f| f delta_X.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import _linalg
from .errors import BraidWordError, PossiblyIsomorphicPair
from .graded_space import GradedDim, gap_check, hom_dims
from .k_theory import EulerLattice, KTReport, kt_verdict, matvec, twist_matrix
from .laurent_poly import Laurent1
from .serre_entropy import EntropyValue
from .twist_entropy import h0_composition


class CYExtAlgebra:
    """Ext^*(S1 + S2, S1 + S2): idempotents e1, e2, arrows v: 1->2 (deg 1),
    u: 2->1 (deg d-1), loops uv = u.v at 1 and vu = v.u at 2 (deg d).
    All paths of length three vanish.
    """

    def __init__(self, d: int):
        if d < 2:
            raise ValueError("the Ext algebra model needs d >= 2")
        self.d = d
        self.basis = {
            "e1": (1, 1, 0),
            "e2": (2, 2, 0),
            "v": (1, 2, 1),
            "u": (2, 1, d - 1),
            "uv": (1, 1, d),
            "vu": (2, 2, d),
        }
        self._slot = {}
        for name, key in self.basis.items():
            assert key not in self._slot
            self._slot[key] = name
        self._check_anchors()

    def element(self, src: int, tgt: int, deg: int) -> str | None:
        return self._slot.get((src, tgt, deg))

    def degree(self, x: str) -> int:
        return self.basis[x][2]

    def compose(self, x: str, y: str) -> str | None:
        """x o y (y first), or None when the product vanishes."""
        xs, xt, _ = self.basis[x]
        ys, yt, _ = self.basis[y]
        if xs != yt:
            return None
        if x in ("e1", "e2"):
            return y
        if y in ("e1", "e2"):
            return x
        return {("u", "v"): "uv", ("v", "u"): "vu"}.get((x, y))

    def hom_dims(self, src: int, tgt: int) -> GradedDim:
        return GradedDim({deg: 1 for (s, t, deg) in self._slot if s == src and t == tgt})

    def _check_anchors(self) -> None:
        d = self.d
        assert self.hom_dims(1, 1) == {0: 1, d: 1}
        assert self.hom_dims(2, 2) == {0: 1, d: 1}
        assert self.hom_dims(2, 1) == {d - 1: 1}
        assert self.hom_dims(1, 2) == {1: 1}
        for x in self.basis:
            for y in self.basis:
                z = self.compose(x, y)
                if z is not None:
                    assert self.degree(z) == self.degree(x) + self.degree(y)


@lru_cache(maxsize=None)
def ext_algebra(d: int) -> CYExtAlgebra:
    return CYExtAlgebra(d)


@dataclass(frozen=True)
class TwistedComplex:
    d: int
    gens: tuple[tuple[int, int], ...]
    diff: dict = field(default_factory=dict, compare=False, hash=False)

    @classmethod
    def simple(cls, i: int, d: int, shift: int = 0) -> "TwistedComplex":
        if i not in (1, 2):
            raise ValueError("vertex must be 1 or 2")
        return cls(d, ((i, shift),), {})

    @property
    def algebra(self) -> CYExtAlgebra:
        return ext_algebra(self.d)

    def __len__(self):
        return len(self.gens)

    def entry(self, k: int, l: int) -> str | None:
        """Basis element in the (k, l) slot of the differential, if one exists."""
        (ik, sk), (il, sl) = self.gens[k], self.gens[l]
        return self.algebra.element(il, ik, 1 + sk - sl)

    def shifted(self, n: int) -> "TwistedComplex":
        """X[n]."""
        sign = -1 if n % 2 else 1
        return TwistedComplex(
            self.d,
            tuple((i, s + n) for i, s in self.gens),
            {kl: sign * c for kl, c in self.diff.items()},
        )

    def diff_squared(self) -> dict:
        """Nonzero entries of delta o delta."""
        A = self.algebra
        out: dict = {}
        for (k, l), a in self.diff.items():
            for (l2, m), b in self.diff.items():
                if l2 != l:
                    continue
                if A.compose(self.entry(k, l), self.entry(l, m)) is not None:
                    out[(k, m)] = out.get((k, m), 0) + a * b
        return {km: c for km, c in out.items() if c}

    def is_minimal(self) -> bool:
        return not any(self.algebra.degree(self.entry(k, l)) == 0 for k, l in self.diff)

    def __str__(self):
        gens = " + ".join(f"S{i}[{s}]" for i, s in self.gens) or "0"
        if not self.diff:
            return gens
        arrows = ", ".join(f"{k}<-{l}:{c}*{self.entry(k, l)}" for (k, l), c in sorted(self.diff.items()))
        return f"{gens} | {arrows}"


def _check_entries(X: TwistedComplex) -> None:
    for (k, l), c in X.diff.items():
        if X.entry(k, l) is None:
            raise ValueError(f"no algebra element fits the ({k}, {l}) slot")
        if not c:
            raise ValueError("zero coefficients must not be stored")


def make_complex(d: int, gens: Sequence[tuple[int, int]], diff: dict) -> TwistedComplex:
    X = TwistedComplex(d, tuple((int(i), int(s)) for i, s in gens),
                       {kl: Fraction(c) for kl, c in diff.items() if c})
    _check_entries(X)
    return X


# -- Hom complexes -----------------------------------------------------------


@dataclass
class HomComplex:
    """Graded pieces C^n of Hom(X, Y) and the differential D^n: C^n -> C^{n+1}."""

    basis: dict  # n -> list of (l, k)
    index: dict  # n -> {(l, k): position}
    diff: dict  # n -> sparse matrix {(row in C^{n+1}, col in C^n): Fraction}

    def dim(self, n: int) -> int:
        return len(self.basis.get(n, ()))


def hom_complex(X: TwistedComplex, Y: TwistedComplex) -> HomComplex:
    if X.d != Y.d:
        raise ValueError("complexes live over different algebras")
    A = X.algebra
    elem: dict = {}
    basis: dict = {}
    for k, (ik, sk) in enumerate(X.gens):
        for l, (jl, tl) in enumerate(Y.gens):
            for (src, tgt, deg), name in A._slot.items():
                if src == ik and tgt == jl:
                    n = deg - tl + sk
                    basis.setdefault(n, []).append((l, k))
                    elem[(l, k, n)] = name
    index = {n: {b: p for p, b in enumerate(bs)} for n, bs in basis.items()}

    y_out: dict = {}
    for (l2, l), c in Y.diff.items():
        y_out.setdefault(l, []).append((l2, c, Y.entry(l2, l)))
    x_in: dict = {}
    for (k, k2), c in X.diff.items():
        x_in.setdefault(k, []).append((k2, c, X.entry(k, k2)))

    diff: dict = {}
    for (l, k, n), f in elem.items():
        col = index[n][(l, k)]
        mat = diff.setdefault(n, {})
        target = index.get(n + 1, {})
        for l2, c, y in y_out.get(l, ()):
            if A.compose(y, f) is not None:
                row = target[(l2, k)]
                mat[(row, col)] = mat.get((row, col), 0) + c
        sign = -1 if n % 2 == 0 else 1
        for k2, c, x in x_in.get(k, ()):
            if A.compose(f, x) is not None:
                row = target[(l, k2)]
                mat[(row, col)] = mat.get((row, col), 0) + sign * c
    return HomComplex(basis, index, diff)


def hom_poincare(X: TwistedComplex, Y: TwistedComplex) -> Laurent1:
    """sum_n dim Hom(X, Y[n]) q^n."""
    H = hom_complex(X, Y)
    ranks = {n: _linalg.rank(H.diff.get(n, {}), H.dim(n + 1), H.dim(n)) for n in H.basis}
    return Laurent1({n: H.dim(n) - ranks[n] - ranks.get(n - 1, 0) for n in H.basis})


def cohomology_basis(X: TwistedComplex, Y: TwistedComplex) -> list[tuple[int, dict]]:
    """Cocycles (n, {(l, k): coeff}) representing a basis of H^*(Hom(X, Y))."""
    H = hom_complex(X, Y)
    out = []
    for n in sorted(H.basis):
        cycles = _linalg.nullspace(H.diff.get(n, {}), H.dim(n + 1), H.dim(n))
        if not cycles:
            continue
        prev = H.diff.get(n - 1, {})
        boundaries: dict = {}
        for (r, c), x in prev.items():
            boundaries.setdefault(c, {})[r] = x
        reps = _linalg.complement(list(boundaries.values()), cycles, H.dim(n))
        for vec in reps:
            out.append((n, {H.basis[n][p]: x for p, x in vec.items() if x}))
    return out


# -- twists and Gaussian elimination -----------------------------------------


def minimize(X: TwistedComplex) -> TwistedComplex:
    """Cancel invertible (scalar identity) differential entries until none remain.

    Removing an isomorphism phi from generator l to generator k replaces
    delta_ab by delta_ab - delta_al phi^{-1} delta_kb; the result is
    homotopy equivalent to X.
    """
    A = X.algebra
    gens = list(X.gens)
    diff = dict(X.diff)
    while True:
        pivots = sorted(
            (l, k) for (k, l) in diff if A.degree(_slot_elem(A, gens, k, l)) == 0
        )
        if not pivots:
            break
        l, k = pivots[0]
        phi = diff[(k, l)]
        into_l = [(a, c) for (a, l2), c in diff.items() if l2 == l and a != k]
        from_k = [(b, c) for (k2, b), c in diff.items() if k2 == k and b != l]
        new = {(a, b): c for (a, b), c in diff.items() if a not in (k, l) and b not in (k, l)}
        for a, ca in into_l:
            if a == l:
                continue
            x = _slot_elem(A, gens, a, l)
            for b, cb in from_k:
                if b == k:
                    continue
                if A.compose(x, _slot_elem(A, gens, k, b)) is not None:
                    new[(a, b)] = new.get((a, b), 0) - ca * cb / phi
        keep = [g for g in range(len(gens)) if g not in (k, l)]
        renum = {old: pos for pos, old in enumerate(keep)}
        gens = [gens[g] for g in keep]
        diff = {(renum[a], renum[b]): c for (a, b), c in new.items() if c}
    return TwistedComplex(X.d, tuple(gens), diff)


def _slot_elem(A: CYExtAlgebra, gens, k: int, l: int) -> str:
    (ik, sk), (il, sl) = gens[k], gens[l]
    return A.element(il, ik, 1 + sk - sl)


def cone_from_simple(X: TwistedComplex, i: int) -> TwistedComplex:
    """cone(Hom^*(S_i, X) (x) S_i -> X), unminimized."""
    reps = cohomology_basis(TwistedComplex.simple(i, X.d), X)
    m = len(reps)
    gens = [(i, 1 - n) for n, _ in reps] + list(X.gens)
    diff = {(m + k, m + l): c for (k, l), c in X.diff.items()}
    for g, (_, vec) in enumerate(reps):
        for (l, _k), c in vec.items():
            diff[(m + l, g)] = c
    return TwistedComplex(X.d, tuple(gens), diff)


def cocone_to_simple(X: TwistedComplex, i: int) -> TwistedComplex:
    """cone(X -> Hom^*(X, S_i)^* (x) S_i)[-1], unminimized."""
    reps = cohomology_basis(X, TwistedComplex.simple(i, X.d))
    m = len(X.gens)
    gens = list(X.gens) + [(i, n - 1) for n, _ in reps]
    diff = dict(X.diff)
    for g, (_, vec) in enumerate(reps):
        for (_l, k), c in vec.items():
            diff[(m + g, k)] = -c
    return TwistedComplex(X.d, tuple(gens), diff)


def twist_apply(X: TwistedComplex, letter: int) -> TwistedComplex:
    """Apply T_i (letter = +i) or T_i^{-1} (letter = -i), then minimize."""
    i = abs(letter)
    if i not in (1, 2):
        raise BraidWordError(f"letter must be one of +1, -1, +2, -2, got {letter}")
    raw = cone_from_simple(X, i) if letter > 0 else cocone_to_simple(X, i)
    return minimize(raw)


# -- braid words ---------------------------------------------------------------


@dataclass(frozen=True)
class BraidWord:
    """Word in sigma_1^{±1}, sigma_2^{±1}; letters +i / -i. Acts right to left."""

    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for x in self.letters:
            if x not in (1, -1, 2, -2):
                raise BraidWordError(f"invalid braid letter {x}")

    def __len__(self):
        return len(self.letters)

    def __add__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(tuple(-x for x in reversed(self.letters)))

    def __str__(self):
        return " ".join(f"s{abs(x)}" + ("" if x > 0 else "^-1") for x in self.letters)

    def compact(self) -> str:
        return "".join(f"{abs(x)}" + ("" if x > 0 else "'") for x in self.letters)


_TOKEN = re.compile(r"(?:σ|s|S)([12])(\^-1|\^\{-1\}|')?|([12])(')?")


def parse_braid(text: str | Iterable[int] | BraidWord) -> BraidWord:
    """Parse "s1 S2 s1^-1" (S = inverse) or compact "121'" (apostrophe = inverse)."""
    if isinstance(text, BraidWord):
        return text
    if not isinstance(text, str):
        return BraidWord(tuple(text))
    letters = []
    pos = 0
    s = text.strip()
    while pos < len(s):
        if s[pos] in " ,*.":
            pos += 1
            continue
        m = _TOKEN.match(s, pos)
        if not m:
            raise BraidWordError(f"cannot parse braid word {text!r} at position {pos}")
        if m.group(1):
            gen = int(m.group(1))
            inv = bool(m.group(2)) != (s[pos] == "S")
        else:
            gen = int(m.group(3))
            inv = bool(m.group(4))
        letters.append(-gen if inv else gen)
        pos = m.end()
    return BraidWord(tuple(letters))


def apply_word(word: BraidWord, X: TwistedComplex) -> TwistedComplex:
    for x in reversed(word.letters):
        X = twist_apply(X, x)
    return X


def reachable(word, i: int, d: int) -> TwistedComplex:
    """word . S_i as a minimal twisted complex."""
    return apply_word(parse_braid(word), TwistedComplex.simple(i, d))


# -- K-theory shadow ------------------------------------------------------------


def simples_lattice(d: int) -> EulerLattice:
    """Euler form on ([S1], [S2]); chi(S2, S1) = (-1)^(d-1)."""
    return EulerLattice.spherical_pair((-1) ** (d - 1), d)


def k_class(word, i: int, d: int) -> list[int]:
    """[word . S_i] in the basis ([S1], [S2]), via the twist matrices."""
    lat = simples_lattice(d)
    v = [int(i == 1), int(i == 2)]
    for x in reversed(parse_braid(word).letters):
        v = matvec(twist_matrix(lat, abs(x) - 1, inverse=x < 0), v)
    return v


def complex_k_class(X: TwistedComplex) -> list[int]:
    v = [0, 0]
    for i, s in X.gens:
        v[i - 1] += -1 if s % 2 else 1
    return v


# -- reports -------------------------------------------------------------------


def self_hom_shape(p: Laurent1, d: int) -> bool:
    """True iff p = q^s (1 + q^d) for some s."""
    c = p.coeffs
    if len(c) != 2 or set(c.values()) != {1}:
        return False
    lo, hi = sorted(c)
    return hi - lo == d


@dataclass(frozen=True)
class PairReport:
    word1: BraidWord
    i: int
    word2: BraidWord
    j: int
    d: int
    p: Laurent1
    V: GradedDim
    dimV: int
    chi: int
    chi_ktheory: int
    classes_independent: bool
    degree_lattice: bool
    gap_ok: bool
    h0: EntropyValue
    kt: KTReport

    @property
    def ktheory_agrees(self) -> bool:
        return self.chi == self.chi_ktheory

    @property
    def floer_dim(self) -> int:
        """dim HF^*(L2, L1) for the matching Lagrangian spheres in the A2 Milnor fibre."""
        return self.dimV

    def to_dict(self) -> dict:
        return {
            "word1": str(self.word1),
            "i": self.i,
            "word2": str(self.word2),
            "j": self.j,
            "d": self.d,
            "p": str(self.p),
            "V": str(self.V),
            "dimV": self.dimV,
            "floer_dim": self.floer_dim,
            "chi": self.chi,
            "chi_ktheory": self.chi_ktheory,
            "ktheory_agrees": self.ktheory_agrees,
            "classes_independent": self.classes_independent,
            "degree_lattice": self.degree_lattice,
            "gap_ok": self.gap_ok,
            "h0": self.h0,
            "kt": self.kt.to_dict(),
        }


def reachable_pair_report(word1, i: int, word2, j: int, d: int) -> PairReport:
    """Hom polynomial p(E2, E1) for E2 = word1 . S_i, E1 = word2 . S_j, and its entropy data."""
    if d < 2:
        raise ValueError("d must be >= 2")
    w1, w2 = parse_braid(word1), parse_braid(word2)
    E2, E1 = reachable(w1, i, d), reachable(w2, j, d)
    p = hom_poincare(E2, E1)
    if self_hom_shape(p, d):
        raise PossiblyIsomorphicPair(
            f"p = {p} has the self-Hom shape q^s(1+q^{d}); the objects may be isomorphic "
            "up to shift (this test is necessary, not sufficient)"
        )
    V = GradedDim.from_poincare(p)
    supp = V.support()
    lat = simples_lattice(d)
    a, b = k_class(w1, i, d), k_class(w2, j, d)
    chi_k = lat.pairing(a, b)
    independent = a[0] * b[1] - a[1] * b[0] != 0
    chi = p(-1)
    return PairReport(
        word1=w1,
        i=i,
        word2=w2,
        j=j,
        d=d,
        p=p,
        V=V,
        dimV=V.total,
        chi=chi,
        chi_ktheory=chi_k,
        classes_independent=independent,
        degree_lattice=all(x % (d - 1) == 0 for x in hom_dims(V, V).support()),
        gap_ok=gap_check(V, d),
        h0=h0_composition(V.total),
        kt=kt_verdict(V.total, chi, d, classes_independent=independent),
    )
