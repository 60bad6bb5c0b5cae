from fractions import Fraction
import math

import pytest
from hypothesis import given, strategies as st

from fubini.families import fubini, fubini_rs
from fubini.poly import IntPoly, RatPoly
from fubini.series import (
    ORDER_GUARD,
    EgfSeries,
    GuardError,
    egf_series,
    log_egf_rhs,
    log_egf_series,
    series_eval,
    series_eval_certified,
)
from fubini.umbra import UmbralExpr, umbral_eval
from fubini.verify.family import poly_family

EPS = Fraction(1, 2**30)
X_GRID = [Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2)]


def _exact(f, x):
    return umbral_eval(UmbralExpr.from_poly(f))(x)


def test_egf_examples():
    for r in range(4):
        for s in range(4):
            e = egf_series(r, s, 3)
            assert len(e.coeffs) == 4
            assert e[0] == RatPoly([math.factorial(s)])
            assert e[1] == RatPoly([r, s + 1]) * math.factorial(s)
    assert egf_series(0, 0, 2)[2] == RatPoly([0, Fraction(1, 2), 1])


@pytest.mark.parametrize("r", range(4))
@pytest.mark.parametrize("s", range(4))
def test_egf_coefficients(r, s):
    values = egf_series(r, s, 10).egf_values()
    for n in range(11):
        assert values[n].to_int() == fubini_rs(n, r, s)


def test_log_egf_examples():
    log = log_egf_series(0, 0, 4)
    assert log[0] == RatPoly()
    assert log[1] == RatPoly([0, 1])
    assert log[2] == RatPoly([0, Fraction(1, 2), Fraction(1, 2)])


@pytest.mark.parametrize("r", range(4))
@pytest.mark.parametrize("s", range(4))
def test_log_egf_matches_rhs(r, s):
    assert log_egf_series(r, s, 10) == log_egf_rhs(r, s, 10)


def test_exp_log_roundtrip():
    # d/dt log(A) = A'/A, so n*L_n = n*A_n - sum_{k<n} k L_k A_{n-k}
    a = egf_series(1, 2, 8) * Fraction(1, 2)
    log = a.log()
    for n in range(1, 9):
        acc = RatPoly()
        for k in range(1, n):
            acc = acc + (log[k] * a[n - k]).scale(k)
        assert log[n].scale(n) + acc == a[n].scale(n)


def test_order_guard():
    egf_series(0, 0, ORDER_GUARD)
    with pytest.raises(GuardError):
        egf_series(0, 0, ORDER_GUARD + 1)
    with pytest.raises(GuardError):
        log_egf_series(0, 0, ORDER_GUARD + 1)


def test_series_truncation():
    a = EgfSeries.of(3, [1, 1, 1, 1])
    assert (a * a).coeffs == tuple(RatPoly([c]) for c in (1, 2, 3, 4))


def test_series_eval_examples():
    v = series_eval(IntPoly([0, 0, 0, 1]), 1, Fraction(1, 2**20))
    assert abs(v - 13) <= Fraction(1, 2**20)
    res = series_eval_certified(IntPoly([1]), 1, Fraction(1, 2**20))
    assert abs(res.value - 1) <= res.tail_bound
    assert series_eval(IntPoly([0, 1]), 0, Fraction(1, 10)) == 0


def test_series_eval_guards():
    with pytest.raises(ValueError):
        series_eval(IntPoly([1]), 1, 0)
    with pytest.raises(ValueError):
        series_eval(IntPoly([1]), Fraction(-1, 4), Fraction(1, 10))


@pytest.mark.parametrize("x", X_GRID, ids=str)
@pytest.mark.parametrize("idx", range(27))
def test_series_eval_family(idx, x):
    f = poly_family(0)[idx]
    res = series_eval_certified(f, x, EPS)
    err = abs(res.value - _exact(f, x))
    assert res.tail_bound <= EPS
    assert err <= res.tail_bound


@given(
    st.lists(st.integers(-20, 20), max_size=6).map(IntPoly),
    st.fractions(min_value=0, max_value=3, max_denominator=5),
)
def test_series_eval_property(f, x):
    eps = Fraction(1, 2**16)
    res = series_eval_certified(f, x, eps)
    assert abs(res.value - _exact(f, x)) <= res.tail_bound <= eps


@pytest.mark.parametrize("n", range(9))
def test_series_eval_powers(n):
    res = series_eval_certified(IntPoly.monomial(n), 1, EPS)
    assert abs(res.value - fubini(n)(1)) <= EPS
