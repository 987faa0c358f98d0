import pytest
from hypothesis import given, strategies as st

from carpet_ext.divisors import (
    C0, FIBER, ZERO, DivisorClass, HirzebruchSurface, canonical, intersect, is_effective, is_very_ample,
)

ints = st.integers(-20, 20)
classes = st.builds(DivisorClass, ints, ints)
surfaces = st.builds(HirzebruchSurface, st.integers(0, 6))


def test_intersection_examples():
    assert intersect(C0, C0, HirzebruchSurface(1)) == -1
    for e in range(5):
        assert intersect(FIBER, FIBER, HirzebruchSurface(e)) == 0
    h = DivisorClass(2, 6)
    assert intersect(h, h, HirzebruchSurface(0)) == 24


def test_canonical_examples():
    assert canonical(HirzebruchSurface(0)) == DivisorClass(-2, -2)
    assert canonical(HirzebruchSurface(1)) == DivisorClass(-2, -3)
    s = HirzebruchSurface(2)
    assert intersect(canonical(s), canonical(s), s) == 8


def test_very_ample_examples():
    assert is_very_ample(DivisorClass(2, 2), HirzebruchSurface(0))
    assert not is_very_ample(DivisorClass(2, 2), HirzebruchSurface(1))
    assert is_very_ample(DivisorClass(1, 1), HirzebruchSurface(0))
    assert not is_very_ample(DivisorClass(0, 5), HirzebruchSurface(0))


def test_effective_examples():
    assert is_effective(ZERO)
    assert not is_effective(DivisorClass(-1, 5))
    assert is_effective(DivisorClass(2, 2))


def test_negative_e_rejected():
    with pytest.raises(ValueError):
        HirzebruchSurface(-1)


def test_arithmetic_and_str():
    d = 2 * C0 + 3 * FIBER
    assert d == DivisorClass(2, 3)
    assert -d == DivisorClass(-2, -3)
    assert d - d == ZERO
    assert str(DivisorClass(2, -3)) == "2C0-3f"


@given(classes, classes, classes, surfaces, ints)
def test_bilinear(d1, d2, d3, s, k):
    assert intersect(d1 + d2, d3, s) == intersect(d1, d3, s) + intersect(d2, d3, s)
    assert intersect(k * d1, d2, s) == k * intersect(d1, d2, s)


@given(classes, classes, surfaces)
def test_symmetric(d1, d2, s):
    assert intersect(d1, d2, s) == intersect(d2, d1, s)


@given(surfaces)
def test_canonical_square_is_eight(s):
    k = canonical(s)
    assert intersect(k, k, s) == 8


@given(classes, surfaces)
def test_adjunction_parity(d, s):
    # D.(D+K) is even on every smooth surface
    assert intersect(d, d + canonical(s), s) % 2 == 0
