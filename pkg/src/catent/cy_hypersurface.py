"""Line bundle cohomology on P^n x P^m and on the Calabi-Yau hypersurface X.

X is cut out by a section of O(n+1, m+1), so for L = O_X(a, b) the triangle
O(a-n-1, b-m-1) -> O(a, b) -> L gives a long exact sequence. It is only
used when the two outer terms have disjoint cohomological supports, in
which case every connecting map is zero for degree reasons.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import AmbiguousConnectingMap
from .graded_space import GradedDim, convolve, gap_check
from .k_theory import KTReport, kt_verdict


def pn_line_bundle_cohom(n: int, a: int) -> GradedDim:
    """H^*(P^n, O(a))."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if a >= 0:
        return GradedDim({0: comb(n + a, n)})
    if a <= -n - 1:
        return GradedDim({n: comb(-a - 1, n)})
    return GradedDim()


def product_cohom(n: int, m: int, a: int, b: int) -> GradedDim:
    """H^*(P^n x P^m, O(a, b)) by Kunneth."""
    return convolve(pn_line_bundle_cohom(n, a), pn_line_bundle_cohom(m, b))


def hypersurface_section_cohom(n: int, m: int, a: int, b: int) -> GradedDim:
    """H^*(X, O_X(a, b))."""
    ambient = product_cohom(n, m, a, b)
    kernel = product_cohom(n, m, a - n - 1, b - m - 1)
    overlap = set(ambient.support()) & set(kernel.support())
    if overlap:
        raise AmbiguousConnectingMap(
            f"O({a - n - 1},{b - m - 1}) and O({a},{b}) both have cohomology in degrees "
            f"{sorted(overlap)}; the connecting map ranks are not determined"
        )
    dims = ambient.dims
    for p, k in kernel.dims.items():
        dims[p - 1] = dims.get(p - 1, 0) + k
    return GradedDim(dims)


def family_case_label(n: int, m: int) -> str:
    if n >= 3 and n % 2 == 1 and m >= 2 and m % 2 == 0:
        return "1"
    if n >= 2 and m >= 2 and n % 2 == 0 and m % 2 == 0:
        return "2"
    return "outside"


@dataclass(frozen=True)
class ExampleReport:
    n: int
    m: int
    d: int
    N: int
    V: GradedDim
    dimV: int
    w: int
    lam: int
    gap_ok: bool
    case_label: str
    kt: KTReport

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "d": self.d,
            "N": self.N,
            "V": str(self.V),
            "dimV": self.dimV,
            "w": self.w,
            "lambda": self.lam,
            "gap_ok": self.gap_ok,
            "case_label": self.case_label,
            "kt": self.kt.to_dict(),
        }


def build_kt_example(n: int, m: int) -> ExampleReport:
    """V = RHom(O_X, O_X(n+1, 0)) on the hypersurface in P^n x P^m, and its KT verdict."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if m < 2:
        raise ValueError("m must be >= 2 so that the two cohomology groups of L are separated")
    d = m + n - 1
    V = hypersurface_section_cohom(n, m, n + 1, 0)
    lam = V.euler()
    return ExampleReport(
        n=n,
        m=m,
        d=d,
        N=comb(2 * n + 1, n + 1),
        V=V,
        dimV=V.total,
        w=V.width,
        lam=lam,
        gap_ok=gap_check(V, d),
        case_label=family_case_label(n, m),
        # O_X and L have different first Chern classes
        kt=kt_verdict(V.total, lam, d, classes_independent=True),
    )
