"""Dense univariate polynomials over Z, Q and Z/pZ.

Coefficient tuples are stored low degree first and are always normalized:
no trailing zeros, so the zero polynomial is the empty tuple.
"""

from fractions import Fraction
from functools import lru_cache
import math

from fubini import kernels

#: Degree of the zero polynomial.
NEG_INF = -math.inf

MAX_MODULUS = 2**31


class DivisibilityError(ArithmeticError):
    pass


class NotPrimeError(ValueError):
    pass


class NonInvertibleError(ZeroDivisionError):
    pass


def _strip(c):
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


class _DensePoly:
    """Shared ring operations; subclasses fix the coefficient type."""

    __slots__ = ("coeffs",)
    _coerce = staticmethod(int)

    def __init__(self, coeffs=()):
        self.coeffs = _strip([self._coerce(v) for v in coeffs])

    @classmethod
    def _raw(cls, coeffs):
        # trusted path: coeffs already have the right type
        obj = cls.__new__(cls)
        obj.coeffs = _strip(coeffs)
        return obj

    @classmethod
    def x(cls):
        return cls._raw([0, 1])

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, _DensePoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _strip([other])
        return NotImplemented

    def __hash__(self):
        return hash((type(self).__name__, self.coeffs))

    def __repr__(self):
        return f"{type(self).__name__}({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(terms).replace("+ -", "- ")

    def _lift(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, (int, Fraction)):
            return type(self)([other])
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return self._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return self._raw([-v for v in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, type(self)):
            return NotImplemented
        return self._raw(kernels.convolve(list(self.coeffs), list(other.coeffs)))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c):
        if c == 0:
            return self._raw([])
        return self._raw([c * v for v in self.coeffs])

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative exponent")
        result = type(self)([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def derivative(self):
        return self._raw([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, value):
        """Horner evaluation at an int or Fraction."""
        r = 0
        for c in reversed(self.coeffs):
            r = r * value + c
        return r

    def shift(self, a):
        """The polynomial ``x -> f(x + a)``."""
        n = len(self.coeffs)
        out = list(self.coeffs)
        # repeated synthetic division (Taylor shift)
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                out[j] += a * out[j + 1]
        return self._raw(out)

    def mul_xk(self, k):
        if not self.coeffs:
            return self
        return self._raw([0] * k + list(self.coeffs))

    def div_xk(self, k):
        """Exact division by ``x**k``."""
        if any(self.coeffs[:k]):
            raise DivisibilityError(f"{self} is not divisible by x^{k}")
        return self._raw(list(self.coeffs[k:]))


class IntPoly(_DensePoly):
    """Polynomial in x with arbitrary-precision integer coefficients."""

    __slots__ = ()
    _coerce = staticmethod(int)

    def scale(self, c):
        if isinstance(c, Fraction):
            return self.to_rat().scale(c)
        return super().scale(c)

    def to_rat(self):
        return RatPoly._raw([Fraction(v) for v in self.coeffs])


class RatPoly(_DensePoly):
    """Polynomial in x with rational coefficients in lowest terms."""

    __slots__ = ()
    _coerce = staticmethod(Fraction)

    def _lift(self, other):
        if isinstance(other, IntPoly):
            return other.to_rat()
        return super()._lift(other)

    def __mul__(self, other):
        if isinstance(other, IntPoly):
            other = other.to_rat()
        return super().__mul__(other)

    __rmul__ = __mul__

    def scale(self, c):
        return super().scale(Fraction(c))

    def monic(self):
        if not self.coeffs:
            return self
        return self.scale(1 / self.leading)

    def __divmod__(self, other):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        d = other.coeffs
        dl = d[-1]
        q = [Fraction(0)] * max(len(r) - len(d) + 1, 0)
        for i in range(len(r) - len(d), -1, -1):
            c = r[i + len(d) - 1] / dl
            q[i] = c
            if c:
                for j, dj in enumerate(d):
                    r[i + j] -= c * dj
        return self._raw(q), self._raw(r[: len(d) - 1])

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def to_int(self):
        if any(c.denominator != 1 for c in self.coeffs):
            raise ValueError("non-integral coefficient")
        return IntPoly._raw([c.numerator for c in self.coeffs])


def gcd(a, b):
    """Monic gcd of two rational polynomials (Euclid)."""
    while b:
        a, b = b, a % b
    return a.monic()


@lru_cache(maxsize=None)
def is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def check_prime(p):
    if not isinstance(p, int) or not 2 <= p < MAX_MODULUS or not is_prime(p):
        raise NotPrimeError(f"modulus must be a prime below 2^31, got {p!r}")
    return p


def mod_inv(a, p):
    """Inverse of ``a`` modulo the prime ``p``, in ``[1, p)``."""
    if a % p == 0:
        raise NonInvertibleError(f"{a} is not invertible mod {p}")
    return pow(a, -1, p)


class ModPoly:
    """Polynomial over the residues modulo a prime ``p``."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p, coeffs=()):
        self.p = check_prime(p)
        self.coeffs = _strip([int(c) % p for c in coeffs])

    @classmethod
    def _raw(cls, p, coeffs):
        obj = cls.__new__(cls)
        obj.p = p
        obj.coeffs = _strip(coeffs)
        return obj

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, ModPoly):
            return self.p == other.p and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("ModPoly", self.p, self.coeffs))

    def __repr__(self):
        return f"ModPoly({self.p}, {list(self.coeffs)!r})"

    def _lift(self, other):
        if isinstance(other, ModPoly):
            if other.p != self.p:
                raise ValueError(f"moduli differ: {self.p} vs {other.p}")
            return other
        if isinstance(other, int):
            return ModPoly._raw(self.p, [other % self.p])
        if isinstance(other, IntPoly):
            return reduce_mod(other, self.p)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        p = self.p
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = (out[i] + v) % p
        return ModPoly._raw(p, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.p
        return ModPoly._raw(p, [(p - v) % p for v in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c %= self.p
        return ModPoly._raw(self.p, [c * v % self.p for v in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return ModPoly._raw(
            self.p, kernels.convolve_mod(list(self.coeffs), list(other.coeffs), self.p)
        )

    __rmul__ = __mul__

    def __pow__(self, e):
        result = ModPoly._raw(self.p, [1])
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __call__(self, value):
        return kernels.horner_mod(list(self.coeffs), value, self.p)


def reduce_mod(a, p):
    """Coefficientwise reduction of an integer polynomial modulo a prime."""
    check_prime(p)
    return ModPoly._raw(p, [c % p for c in a.coeffs])
