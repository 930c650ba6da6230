import pytest
from hypothesis import given, strategies as st

from catent.errors import GapConditionFails
from catent.graded_space import (
    GradedDim,
    find_shift,
    gap_check,
    hom_dims,
    lemma_vanishing_check,
    shift,
)

graded = st.dictionaries(st.integers(-6, 6), st.integers(1, 4), max_size=4).map(GradedDim)
nonempty = st.dictionaries(st.integers(-6, 6), st.integers(1, 4), min_size=1, max_size=4).map(GradedDim)
dd = st.integers(1, 8)


def test_hom_dims_examples():
    assert hom_dims(GradedDim({0: 1}), GradedDim({0: 1})) == {0: 1}
    assert hom_dims(GradedDim({2: 1}), GradedDim({5: 1})) == {3: 1}
    V = GradedDim({0: 10, 1: 1})
    assert hom_dims(V, V) == {-1: 10, 0: 101, 1: 10}
    assert hom_dims(GradedDim(), V) == GradedDim()


def test_gap_examples():
    assert all(gap_check(GradedDim({0: 1}), d) for d in range(1, 10))
    assert not gap_check(GradedDim({0: 1, 3: 1}), 3)
    assert gap_check(GradedDim({0: 10, 1: 1}), 3)


def test_vanishing_examples():
    assert lemma_vanishing_check(GradedDim({0: 1}), 2).all
    f = lemma_vanishing_check(GradedDim({2: 1}), 2)
    assert (f.top, f.dual, f.gap, f.triple) == (True, True, True, False)
    assert lemma_vanishing_check(GradedDim({-10: 10, -9: 1}), 3).all


def test_shift_examples():
    V = GradedDim({0: 10, 1: 1})
    assert shift(V, 10) == {-10: 10, -9: 1}
    assert shift(V, 0) == V
    assert shift(V, 3).max_deg == V.max_deg - 3


def test_find_shift_examples():
    assert find_shift(GradedDim({0: 10, 1: 1}), 3) == 0
    assert find_shift(GradedDim({3: 1}), 2) == 2
    assert find_shift(GradedDim({0: 1}), 5) == 0
    with pytest.raises(GapConditionFails):
        find_shift(GradedDim({0: 1, 3: 1}), 3)


def test_invariants_and_text():
    V = GradedDim({1: 1, 0: 10})
    assert str(V) == "{0:10, 1:1}"
    assert (V.total, V.width, V.euler()) == (11, 1, 9)
    with pytest.raises(ValueError):
        GradedDim({0: -1})
    assert GradedDim({0: 0, 1: 2}).dims == {1: 2}


def _brute_hom(V, W):
    out = {}
    for p, a in V.dims.items():
        for r, b in W.dims.items():
            out[r - p] = out.get(r - p, 0) + a * b
    return GradedDim(out)


@given(graded, graded)
def test_hom_dims_against_pairwise_count(V, W):
    H = hom_dims(V, W)
    assert H == _brute_hom(V, W)
    assert H.total == V.total * W.total


@given(nonempty)
def test_self_hom_degree_zero(V):
    assert hom_dims(V, V)[0] == sum(x * x for x in V.dims.values()) >= 1


@given(graded, st.integers(-10, 10), st.integers(-10, 10), dd)
def test_shift_group_action_and_gap_invariance(V, a, b, d):
    assert shift(shift(V, a), b) == shift(V, a + b)
    assert gap_check(shift(V, a), d) == gap_check(V, d)
    assert gap_check(V, d) == (hom_dims(V, V)[d] == 0)


@given(graded, dd)
def test_vanishing_flags_by_enumeration(V, d):
    s = V.support()
    f = lemma_vanishing_check(V, d)
    assert f.top == (V[1 + d] == 0)
    assert f.dual == (V[-d] == 0)
    assert f.gap == gap_check(V, d)
    assert f.triple == (not any(y + z - x == d for x in s for y in s for z in s))


@given(nonempty, dd)
def test_find_shift_minimal(V, d):
    if not gap_check(V, d):
        with pytest.raises(GapConditionFails):
            find_shift(V, d)
        return
    n = find_shift(V, d)
    assert lemma_vanishing_check(shift(V, n), d).all
    assert not any(lemma_vanishing_check(shift(V, k), d).all for k in range(n))
