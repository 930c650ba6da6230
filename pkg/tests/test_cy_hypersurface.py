from itertools import combinations_with_replacement
from math import comb, prod

import pytest
from hypothesis import given, strategies as st

from catent.errors import AmbiguousConnectingMap
from catent.graded_space import GradedDim, gap_check
from catent.k_theory import Verdict
from catent.cy_hypersurface import (
    build_kt_example,
    hypersurface_section_cohom,
    pn_line_bundle_cohom,
    product_cohom,
)
from catent.laurent_poly import evaluate_int


def _monomials(nvars, deg):
    return sum(1 for _ in combinations_with_replacement(range(nvars), deg)) if deg >= 0 else 0


def _chi_pn(n, a):
    """Hilbert polynomial of P^n: (a+1)(a+2)...(a+n)/n!, valid for every integer a."""
    return prod(a + k for k in range(1, n + 1)) // prod(range(1, n + 1))


def test_pn_examples():
    for n in range(1, 6):
        assert pn_line_bundle_cohom(n, 0) == {0: 1}
    assert pn_line_bundle_cohom(2, 3) == {0: 10}
    assert pn_line_bundle_cohom(2, -3) == {2: 1}
    assert pn_line_bundle_cohom(3, -2) == GradedDim()


@given(st.integers(1, 6), st.integers(-12, 12))
def test_pn_against_monomial_count_and_duality(n, a):
    H = pn_line_bundle_cohom(n, a)
    assert H[0] == _monomials(n + 1, a)
    assert H[n] == _monomials(n + 1, -a - n - 1)
    assert H.total == pn_line_bundle_cohom(n, -a - n - 1).total
    assert H.euler() == _chi_pn(n, a)


def test_product_examples():
    assert product_cohom(2, 2, 0, -3) == {2: 1}
    assert product_cohom(3, 4, -1, 5) == GradedDim()
    assert product_cohom(2, 2, 3, 0) == {0: 10}


def test_section_examples():
    assert hypersurface_section_cohom(2, 2, 3, 0) == {0: 10, 1: 1}
    assert hypersurface_section_cohom(2, 2, 0, 0) == {0: 1, 3: 1}
    with pytest.raises(AmbiguousConnectingMap):
        hypersurface_section_cohom(2, 2, 3, 3)


@given(st.integers(1, 5), st.integers(1, 5), st.integers(-8, 8), st.integers(-8, 8))
def test_section_euler_characteristic(n, m, a, b):
    try:
        H = hypersurface_section_cohom(n, m, a, b)
    except AmbiguousConnectingMap:
        return
    chi = _chi_pn(n, a) * _chi_pn(m, b) - _chi_pn(n, a - n - 1) * _chi_pn(m, b - m - 1)
    assert H.euler() == chi


@pytest.mark.parametrize("n", range(1, 9))
@pytest.mark.parametrize("m", range(1, 9))
def test_calabi_yau_structure(n, m):
    assert hypersurface_section_cohom(n, m, 0, 0) == {0: 1, m + n - 1: 1}
    if m >= 2:
        V = hypersurface_section_cohom(n, m, n + 1, 0)
        assert V == {0: comb(2 * n + 1, n + 1), m - 1: 1}
        r = build_kt_example(n, m)
        N = comb(2 * n + 1, n + 1)
        assert (r.d, r.N, r.dimV, r.w) == (m + n - 1, N, N + 1, m - 1)
        assert r.lam == evaluate_int(V.poincare(), -1) == N + (-1) ** (m - 1)
        assert r.gap_ok and gap_check(V, r.d)


def test_example_reports():
    r = build_kt_example(2, 2)
    assert (r.d, r.N, r.dimV, r.w, r.lam, r.case_label) == (3, 10, 11, 1, 9, "2")
    assert r.kt.verdict is Verdict.STRICT_GAP
    assert r.kt.h0.approx == pytest.approx(4.77901, abs=1e-4)
    assert r.kt.log_rho.approx == pytest.approx(4.36932, abs=1e-4)
    r = build_kt_example(3, 2)
    assert (r.d, r.N, r.dimV, r.w, r.lam, r.case_label) == (4, 35, 36, 1, 34, "1")
    assert r.kt.verdict is Verdict.STRICT_GAP
    r = build_kt_example(1, 2)
    assert (r.case_label, r.N, r.d, r.lam) == ("outside", 3, 2, 2)
    assert r.kt.verdict is Verdict.HYPOTHESIS_VIOLATED
    with pytest.raises(ValueError):
        build_kt_example(2, 1)
    assert r.to_dict()["V"] == "{0:3, 1:1}"
