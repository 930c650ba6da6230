import pytest
from hypothesis import given, strategies as st

from catent.laurent_poly import Laurent1, Laurent2, evaluate_int, lp_mul, parse_laurent1, specialize_cy

coeff = st.integers(-5, 5)
l1 = st.dictionaries(st.integers(-6, 6), coeff, max_size=5).map(Laurent1)
l2 = st.dictionaries(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), coeff, max_size=4).map(Laurent2)


def q1q2(e1, e2, c=1):
    return Laurent2.monomial(e1, e2, c)


ONE_PLUS = Laurent2.constant(1) + q1q2(-1, 1)


def test_product_examples():
    assert lp_mul(ONE_PLUS, q1q2(1, 0)) == q1q2(1, 0) + q1q2(0, 1)
    assert lp_mul(ONE_PLUS, Laurent2.constant(1)) == ONE_PLUS
    assert lp_mul(ONE_PLUS, ONE_PLUS) == Laurent2({(0, 0): 1, (-1, 1): 2, (-2, 2): 1})


def test_specialize_examples():
    assert specialize_cy(ONE_PLUS, 3) == Laurent1({0: 1, 2: 1})
    assert specialize_cy(q1q2(0, 1), 0) == Laurent1.constant(1)
    assert specialize_cy(q1q2(2, 0) + q1q2(-1, 1), 3) == Laurent1({2: 2})


def test_evaluate_examples():
    for d in range(1, 7):
        assert evaluate_int(Laurent1({0: 1, d: 1}), 1) == 2
    for d in (2, 4, 6):
        assert evaluate_int(Laurent1.monomial(d - 1), -1) == -1
    assert evaluate_int(Laurent1({0: 10, 1: 1}), -1) == 9
    with pytest.raises(ValueError):
        evaluate_int(Laurent1({0: 1}), 2)


def test_zero_coefficients_pruned():
    p = Laurent1({0: 1, 2: 0, 3: -1}) + Laurent1({3: 1})
    assert p.coeffs == {0: 1}
    assert Laurent1({1: 2}) - Laurent1({1: 2}) == Laurent1()


def test_rendering():
    assert str(Laurent1({-1: 1, 0: 2, 3: 1})) == "q^-1 + 2 + q^3"
    assert str(Laurent1({1: -1, 2: 1})) == "-q + q^2"
    assert str(Laurent1()) == "0"


@given(l1)
def test_render_parse_roundtrip(p):
    assert parse_laurent1(str(p)) == p


@given(l2, l2, l2)
def test_mul_ring_axioms(a, b, c):
    assert lp_mul(a, b) == lp_mul(b, a)
    assert lp_mul(lp_mul(a, b), c) == lp_mul(a, lp_mul(b, c))
    assert lp_mul(a, b + c) == lp_mul(a, b) + lp_mul(a, c)


@given(l2, l2, st.integers(-4, 6))
def test_specialize_is_ring_hom(a, b, d):
    assert specialize_cy(lp_mul(a, b), d) == specialize_cy(a, d) * specialize_cy(b, d)
    assert specialize_cy(a + b, d) == specialize_cy(a, d) + specialize_cy(b, d)


@given(l1, l1)
def test_evaluation_multiplicative(a, b):
    assert evaluate_int(a, 1) == sum(a.coeffs.values())
    for x in (1, -1):
        assert evaluate_int(a * b, x) == evaluate_int(a, x) * evaluate_int(b, x)
