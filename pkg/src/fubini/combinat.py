"""Stirling numbers (second kind, r-Stirling of both kinds) and a
brute-force ordered-set-partition oracle.

The r-Stirling functions take shifted indices: ``stirling2_r(n, k, r)`` is
the number written {n+r, k+r}_r, so that

    (x + r)^n = sum_k stirling2_r(n, k, r) * (x)_k
    (x)_n     = sum_k (-1)^(n-k) * stirling1_r_unsigned(n, k, r) * (x + r)^k
"""

import math
import threading

from fubini.poly import IntPoly

ORACLE_MAX_N = 10


class ResourceLimitError(ValueError):
    pass


class StirlingTable:
    """Grow-only triangular table for one (kind, r) pair.

    Rows are appended under a lock; a row, once published, never changes,
    so readers need no lock.
    """

    def __init__(self, kind, r=0):
        if kind not in ("second", "r-second", "r-first-unsigned"):
            raise ValueError(f"unknown Stirling kind {kind!r}")
        if r < 0:
            raise ValueError("r must be non-negative")
        self.kind = kind
        self.r = r
        self.rows = [(1,)]
        self._lock = threading.Lock()

    def _next_row(self, prev, n):
        r = self.r
        row = [0] * (n + 1)
        for k in range(n + 1):
            stay = prev[k] if k < n else 0
            down = prev[k - 1] if k >= 1 else 0
            if self.kind == "r-first-unsigned":
                row[k] = (n - 1 + r) * stay + down
            else:
                row[k] = (k + r) * stay + down
        return tuple(row)

    def row(self, n):
        rows = self.rows
        if n < len(rows):
            return rows[n]
        with self._lock:
            while len(self.rows) <= n:
                m = len(self.rows)
                self.rows.append(self._next_row(self.rows[m - 1], m))
        return self.rows[n]

    def __call__(self, n, k):
        if n < 0 or k < 0 or k > n:
            return 0
        return self.row(n)[k]


_tables = {}
_tables_lock = threading.Lock()


def table(kind, r=0):
    key = (kind, 0 if kind == "second" else r)
    t = _tables.get(key)
    if t is None:
        with _tables_lock:
            t = _tables.setdefault(key, StirlingTable(kind, key[1]))
    return t


def stirling2(n, k):
    return table("second")(n, k)


def stirling2_r(n, k, r):
    return table("r-second", r)(n, k)


def stirling1_r_unsigned(n, k, r):
    return table("r-first-unsigned", r)(n, k)


def set_partitions_rgs(n):
    """Yield restricted growth strings of length ``n``.

    ``a[0] = 0`` and ``a[i] <= 1 + max(a[:i])``; element ``i`` goes into
    block ``a[i]``. Each set partition of [n] appears exactly once.
    """
    if n == 0:
        yield ()
        return
    a = [0] * n

    def rec(i, top):
        if i == n:
            yield tuple(a)
            return
        for b in range(top + 2):
            a[i] = b
            yield from rec(i + 1, max(top, b))

    yield from rec(1, 0)


def ordered_partition_oracle(n):
    """Sum of x^(#blocks) over all ordered set partitions of [n], by enumeration."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > ORACLE_MAX_N:
        raise ResourceLimitError(f"oracle limited to n <= {ORACLE_MAX_N}")
    counts = [0] * (n + 1)
    for rgs in set_partitions_rgs(n):
        counts[max(rgs) + 1 if rgs else 0] += 1
    # each k-block partition has k! block orderings
    return IntPoly([c * math.factorial(k) for k, c in enumerate(counts)])
