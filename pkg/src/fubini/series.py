"""Truncated power series in t over Q[x], the (r,s)-Fubini EGF and its
logarithm, and certified evaluation of f(F_x) as a convergent series.
"""

from dataclasses import dataclass
from fractions import Fraction
import math

from fubini.families import fubini
from fubini.poly import IntPoly, RatPoly

ORDER_GUARD = 24


class GuardError(ValueError):
    pass


def _check_order(order):
    if not 0 <= order <= ORDER_GUARD:
        raise GuardError(f"series order must be in [0, {ORDER_GUARD}], got {order}")


@dataclass(frozen=True)
class EgfSeries:
    """``sum_{n<=order} coeffs[n] t^n``; coefficients are raw (not scaled by n!)."""

    order: int
    coeffs: tuple

    @classmethod
    def of(cls, order, coeffs):
        coeffs = [c if isinstance(c, RatPoly) else _rat(c) for c in coeffs]
        coeffs = coeffs[: order + 1] + [RatPoly()] * (order + 1 - len(coeffs))
        return cls(order, tuple(coeffs))

    def __add__(self, other):
        order = min(self.order, other.order)
        return EgfSeries.of(order, [self.coeffs[n] + other.coeffs[n] for n in range(order + 1)])

    def __mul__(self, other):
        if not isinstance(other, EgfSeries):
            return EgfSeries.of(self.order, [c * _rat(other) for c in self.coeffs])
        order = min(self.order, other.order)
        out = []
        for n in range(order + 1):
            acc = RatPoly()
            for k in range(n + 1):
                a, b = self.coeffs[k], other.coeffs[n - k]
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return EgfSeries.of(order, out)

    __rmul__ = __mul__

    def __getitem__(self, n):
        return self.coeffs[n]

    def egf_values(self):
        """``n! * coeffs[n]``, the sequence whose EGF this is."""
        return [c.scale(math.factorial(n)) for n, c in enumerate(self.coeffs)]

    def log(self):
        """Formal logarithm; requires constant term 1."""
        a = self.coeffs
        if a[0] != RatPoly([1]):
            raise ValueError("log needs a series with constant term 1")
        out = [RatPoly()]
        for n in range(1, self.order + 1):
            acc = RatPoly()
            for k in range(1, n):
                if out[k] and a[n - k]:
                    acc = acc + (out[k] * a[n - k]).scale(k)
            out.append(a[n] - acc.scale(Fraction(1, n)))
        return EgfSeries.of(self.order, out)


def _rat(c):
    if isinstance(c, RatPoly):
        return c
    if isinstance(c, IntPoly):
        return c.to_rat()
    return RatPoly([c])


def _exp_scalar(a, order):
    """e^{a t} truncated."""
    return EgfSeries.of(order, [Fraction(a**n, math.factorial(n)) for n in range(order + 1)])


def egf_series(r, s, order):
    """s! e^{rt} (1 - x(e^t - 1))^{-s-1}, expanded as
    s! e^{rt} sum_j C(s+j, j) (x(e^t - 1))^j."""
    _check_order(order)
    if r < 0 or s < 0:
        raise ValueError("r, s must be non-negative")
    et1 = _exp_scalar(1, order) + EgfSeries.of(order, [-1])
    X = et1 * RatPoly([0, 1])
    total = EgfSeries.of(order, [1])
    term = EgfSeries.of(order, [1])
    for j in range(1, order + 1):
        term = term * X
        total = total + term * math.comb(s + j, j)
    return _exp_scalar(r, order) * total * math.factorial(s)


def log_egf_series(r, s, order):
    """log(1 + sum_{n>=1} F_n(x; r, s)/s! t^n/n!)."""
    return (egf_series(r, s, order) * Fraction(1, math.factorial(s))).log()


def log_egf_rhs(r, s, order):
    """(r + (s+1)x) t + (s+1)(x+1) sum_{n>=2} F_{n-1}(x) t^n/n!."""
    _check_order(order)
    out = [RatPoly()]
    if order >= 1:
        out.append(RatPoly([r, s + 1]))
    x1 = IntPoly([1, 1]) * (s + 1)
    for n in range(2, order + 1):
        out.append((x1 * fubini(n - 1)).scale(Fraction(1, math.factorial(n))))
    return EgfSeries.of(order, out)


@dataclass(frozen=True)
class SeriesValue:
    value: Fraction
    terms: int
    tail_bound: Fraction


def series_eval_certified(f, x, eps):
    """Partial sum of (1/(1+x)) sum_k f(k) (x/(1+x))^k with a proven tail bound.

    For k >= 0, |f(k)| <= C (k+1)^d with C = sum |c_i| and d = deg f. Once
    ((K+2)/(K+1))^d w <= theta with w = x/(1+x) and theta = (1+w)/2, the
    majorants C (k+1)^d w^k decay at least geometrically by theta for all
    k >= K (the ratio is decreasing in k), so the tail after K terms is at
    most C (K+1)^d w^K / ((1 - theta)(1 + x)).
    """
    f = f if isinstance(f, IntPoly) else IntPoly(f)
    x = Fraction(x)
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if x < 0:
        raise ValueError("certified evaluation needs x >= 0")
    if not f:
        return SeriesValue(Fraction(0), 0, Fraction(0))
    d = max(f.degree, 0)
    C = sum(abs(c) for c in f.coeffs)
    w = x / (1 + x)
    theta = (1 + w) / 2
    partial = Fraction(0)
    wk = Fraction(1)
    K = 0
    while True:
        ratio_ok = Fraction(K + 2, K + 1) ** d * w <= theta
        if K > 0 and ratio_ok:
            tail = C * (K + 1) ** d * wk / ((1 - theta) * (1 + x))
            if tail <= eps:
                return SeriesValue(partial / (1 + x), K, tail)
        partial += f(K) * wk
        wk *= w
        K += 1


def series_eval(f, x, eps):
    """f(F_x) at a rational x >= 0, to within ``eps``."""
    return series_eval_certified(f, x, eps).value
