from hypothesis import given, strategies as st

from schubpuzzle.poly import Poly, product

small = st.integers(min_value=1, max_value=5)


def test_difference_text():
    assert str(Poly.diff(2, 1)) == "y2 - y1"
    assert str(Poly.const(0)) == "0"


def test_arithmetic():
    p = Poly.diff(2, 1) * Poly.diff(2, 1)
    assert p == Poly.var(2) * Poly.var(2) - 2 * Poly.var(1) * Poly.var(2) + Poly.var(1) * Poly.var(1)
    assert (p - p).is_zero()
    assert product([]) == Poly.const(1)


@given(small, small, small, small)
def test_substitute_and_evaluate(a, b, c, d):
    p = Poly.diff(a, b) * Poly.diff(c, d)
    assert p.evaluate(lambda v: 0) == 0
    assert p.substitute(lambda v: v).evaluate(lambda v: v) == (a - b) * (c - d)


def test_json_is_sorted_and_stable():
    p = Poly.diff(2, 1)
    assert p.to_json() == (Poly.var(2) - Poly.var(1)).to_json()
    assert [t["coeff"] for t in p.to_json()["terms"]] == [1, -1]
