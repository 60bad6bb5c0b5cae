import math

import pytest
from hypothesis import given, strategies as st

from fubini.scalars import binomial, factorial, falling, rising, scalar


def test_examples():
    assert falling(-1, 2) == 2
    assert rising(1, 2) == 2
    for a in (-3, 0, 5):
        assert falling(a, 0) == 1
        assert rising(a, 0) == 1


@pytest.mark.parametrize("a", range(-10, 11))
@pytest.mark.parametrize("n", range(13))
def test_falling_rising_reflection(a, n):
    assert falling(-a, n) == (-1) ** n * rising(a, n)


@given(st.integers(0, 30), st.integers(0, 30))
def test_binomial_matches_math(n, k):
    assert binomial(n, k) == math.comb(n, k)


@given(st.integers(0, 25))
def test_factorial(n):
    assert factorial(n) == math.factorial(n) == falling(n, n)


@given(st.integers(-20, 20), st.integers(0, 10))
def test_falling_definition(a, n):
    assert falling(a, n) == math.prod(a - i for i in range(n))
    assert rising(a, n) == math.prod(a + i for i in range(n))


def test_unknown_kind():
    with pytest.raises(ValueError):
        scalar("double", 1, 1)


def test_scalar_dispatch():
    assert scalar("factorial", 0, 5) == 120
    assert scalar("binomial", 5, 2) == 10
    assert scalar("binomial", -2, 3) == -4
    assert scalar("falling", -1, 2) == 2
    assert scalar("rising", 1, 2) == 2
