"""Exact combinatorial scalars.

``falling(a, n) = a (a-1) ... (a-n+1)`` and ``rising(a, n) = a (a+1) ... (a+n-1)``
accept any signed integer ``a``; both empty products equal 1.
"""

import math


def factorial(n):
    return math.factorial(n)


def binomial(n, k):
    """C(n, k) for integer ``n`` (possibly negative) and ``k >= 0``.

    Uses the falling-factorial definition so that C(n, k) is defined for
    negative ``n``; returns 0 for ``k < 0``.
    """
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k)
    return falling(n, k) // math.factorial(k)


def falling(a, n):
    if n < 0:
        raise ValueError("n must be non-negative")
    r = 1
    for i in range(n):
        r *= a - i
    return r


def rising(a, n):
    if n < 0:
        raise ValueError("n must be non-negative")
    r = 1
    for i in range(n):
        r *= a + i
    return r


def scalar(kind, a, n):
    """Dispatch by name: ``factorial`` ignores ``a``; ``binomial`` is C(a, n)."""
    if kind == "factorial":
        return factorial(n)
    if kind == "binomial":
        return binomial(a, n)
    if kind == "falling":
        return falling(a, n)
    if kind == "rising":
        return rising(a, n)
    raise ValueError(f"unknown scalar kind {kind!r}")
