"""Polynomials in the umbral variable ``u`` with coefficients in Z[x], and
the Fubini functional ``u^n -> F_n(x)``.

Products are always formed in ``u`` first; :func:`umbral_eval` is a linear
functional and is applied once to the finished expression.
"""

from fubini import kernels
from fubini.families import fubini
from fubini.poly import IntPoly


def _strip(c):
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def _as_intpoly(c):
    return c if isinstance(c, IntPoly) else IntPoly([c])


class UmbralExpr:
    """``sum_i coeffs[i](x) * u^i``; immutable and normalized."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _strip([_as_intpoly(c) for c in coeffs])

    @classmethod
    def _raw(cls, coeffs):
        obj = cls.__new__(cls)
        obj.coeffs = _strip(coeffs)
        return obj

    @classmethod
    def from_poly(cls, f):
        """Read an integer polynomial's variable as ``u``."""
        return cls._raw([IntPoly._raw([c]) for c in f.coeffs])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_scalar(self):
        """True when no coefficient depends on x."""
        return all(c.degree <= 0 for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UmbralExpr):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("UmbralExpr", self.coeffs))

    def __repr__(self):
        return f"UmbralExpr({[list(c.coeffs) for c in self.coeffs]!r})"

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, UmbralExpr):
            other = lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UmbralExpr._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return UmbralExpr._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, UmbralExpr):
            other = lift(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, IntPoly)):
            other = _as_intpoly(other)
            return UmbralExpr._raw([c * other for c in self.coeffs])
        if not isinstance(other, UmbralExpr):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return UmbralExpr._raw([])
        if self.is_scalar() and other.is_scalar():
            prod = kernels.convolve(
                [c[0] for c in self.coeffs], [c[0] for c in other.coeffs]
            )
            return UmbralExpr._raw([IntPoly._raw([v]) for v in prod])
        out = [IntPoly._raw([])] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return UmbralExpr._raw(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        result = lift(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, a):
        """Substitute ``u -> u + a``."""
        out = list(self.coeffs)
        n = len(out)
        if a == 0 or n < 2:
            return self
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                out[j] = out[j] + out[j + 1] * a
        return UmbralExpr._raw(out)

    def at(self, value):
        """Ordinary (non-umbral) evaluation at ``u = value``: an IntPoly in x."""
        r = IntPoly._raw([])
        for c in reversed(self.coeffs):
            r = r * value + c
        return r


def power(n):
    return UmbralExpr._raw([IntPoly._raw([])] * n + [IntPoly._raw([1])])


def lift(p):
    """A polynomial in x (or an integer) as a constant in ``u``."""
    return UmbralExpr._raw([_as_intpoly(p)])


def shift(e, a):
    return e.shift(a)


def mul(e1, e2):
    return e1 * e2


def falling_shift(a, k):
    """``(u + a)_k = prod_{i<k} (u + a - i)``."""
    c = [1]
    for i in range(k):
        root = a - i
        nxt = [0] * (len(c) + 1)
        for j, v in enumerate(c):
            nxt[j] += root * v
            nxt[j + 1] += v
        c = nxt
    return UmbralExpr._raw([IntPoly._raw([v]) for v in c])


def rising_shift(a, k):
    """``<u + a>_k = prod_{i<k} (u + a + i)``."""
    c = [1]
    for i in range(k):
        root = a + i
        nxt = [0] * (len(c) + 1)
        for j, v in enumerate(c):
            nxt[j] += root * v
            nxt[j + 1] += v
        c = nxt
    return UmbralExpr._raw([IntPoly._raw([v]) for v in c])


_BUILDERS = {
    "power": power,
    "shift": shift,
    "mul": mul,
    "falling_shift": falling_shift,
    "rising_shift": rising_shift,
    "lift": lift,
}


def expr_build(kind, *args):
    try:
        return _BUILDERS[kind](*args)
    except KeyError:
        raise ValueError(f"unknown expression kind {kind!r}") from None


def umbral_eval(e):
    """Apply ``u^i -> F_i(x)`` linearly over the Z[x] coefficients."""
    if not e.coeffs:
        return IntPoly._raw([])
    top = max(c.degree + i for i, c in enumerate(e.coeffs) if c)
    acc = [0] * (top + 1)
    for i, c in enumerate(e.coeffs):
        if not c:
            continue
        f = list(fubini(i).coeffs)
        if len(c) == 1:
            kernels.axpy(acc, c[0], f)
        else:
            kernels.axpy(acc, 1, kernels.convolve(list(c.coeffs), f))
    return IntPoly._raw(acc)
