from fractions import Fraction
import pytest
import sympy
from hypothesis import given, strategies as st

from fubini.poly import IntPoly, RatPoly
from fubini.sturm import count_real_roots, squarefree_part, sturm_count_nonpositive


@pytest.mark.parametrize(
    "coeffs, expected",
    [([0, 1, 2], (2, 2)), ([3], (0, 0)), ([1, 0, 1], (0, 2))],
)
def test_examples(coeffs, expected):
    assert sturm_count_nonpositive(IntPoly(coeffs)) == expected


def test_zero_polynomial_rejected():
    with pytest.raises(ValueError):
        sturm_count_nonpositive(IntPoly())


def _from_roots(roots):
    f = RatPoly([1])
    for root in roots:
        f = f * RatPoly([-root, 1])
    return f


rational_roots = st.lists(
    st.fractions(min_value=-6, max_value=6, max_denominator=5), min_size=1, max_size=7
)


@given(rational_roots)
def test_counts_constructed_roots(roots):
    f = _from_roots(roots)
    count, sqf = sturm_count_nonpositive(f)
    assert count == len({r for r in roots if r <= 0})
    assert sqf == len(set(roots))


@given(rational_roots, st.integers(0, 3))
def test_root_at_zero_counted_once(roots, zero_mult):
    f = _from_roots(roots).mul_xk(zero_mult)
    all_roots = set(roots) | ({Fraction(0)} if zero_mult else set())
    count, sqf = sturm_count_nonpositive(f)
    assert count == len({r for r in all_roots if r <= 0})
    assert sqf == len(all_roots)


@given(st.lists(st.integers(-20, 20), min_size=2, max_size=7).filter(lambda c: c[-1] != 0))
def test_total_real_roots_match_sympy(coeffs):
    x = sympy.symbols("x")
    expr = sum(c * x**i for i, c in enumerate(coeffs))
    expected = len(set(sympy.real_roots(sympy.Poly(expr, x))))
    assert count_real_roots(IntPoly(coeffs)) == expected


@given(st.lists(st.integers(-20, 20), min_size=2, max_size=7).filter(lambda c: c[-1] != 0))
def test_nonpositive_roots_match_sympy(coeffs):
    x = sympy.symbols("x")
    expr = sum(c * x**i for i, c in enumerate(coeffs))
    roots = set(sympy.real_roots(sympy.Poly(expr, x)))
    assert sturm_count_nonpositive(IntPoly(coeffs))[0] == sum(1 for r in roots if r <= 0)


def test_squarefree_part_removes_multiplicity():
    f = IntPoly([1, 1]) ** 3 * IntPoly([-2, 1]) ** 2
    g = squarefree_part(f)
    assert g.degree == 2
    assert g(-1) == 0 and g(2) == 0
    assert g.leading == 1
