from itertools import product
import math
import threading

import pytest
import sympy
from sympy.functions.combinatorial.numbers import stirling as sympy_stirling

from fubini.combinat import (
    ResourceLimitError,
    StirlingTable,
    ordered_partition_oracle,
    set_partitions_rgs,
    stirling1_r_unsigned,
    stirling2,
    stirling2_r,
)
from fubini.poly import IntPoly

X = IntPoly.x()


def _falling_poly(shift, k):
    """(x + shift)_k as an IntPoly."""
    out = IntPoly([1])
    for i in range(k):
        out = out * IntPoly([shift - i, 1])
    return out


def test_stirling2_examples():
    assert stirling2(3, 2) == 3
    assert stirling2(4, 2) == 7
    assert all(stirling2(n, n) == 1 for n in range(12))
    assert stirling2(3, 5) == 0
    assert stirling2(3, -1) == 0


@pytest.mark.parametrize("n", range(12))
def test_stirling2_matches_sympy(n):
    assert [stirling2(n, k) for k in range(n + 1)] == [
        int(sympy_stirling(n, k)) for k in range(n + 1)
    ]


@pytest.mark.parametrize("n", range(12))
def test_unsigned_stirling1_r0_matches_sympy(n):
    assert [stirling1_r_unsigned(n, k, 0) for k in range(n + 1)] == [
        int(sympy_stirling(n, k, kind=1)) for k in range(n + 1)
    ]


def test_stirling2_r_examples():
    for n in range(8):
        for k in range(n + 1):
            assert stirling2_r(n, k, 0) == stirling2(n, k)
    assert stirling2_r(1, 0, 2) == 2
    assert stirling2_r(3, 1, 1) == 7


def test_stirling1_r_examples():
    assert all(stirling1_r_unsigned(n, n, r) == 1 for n in range(8) for r in range(5))
    assert stirling1_r_unsigned(2, 0, 1) == 2
    # (x)_2 = x^2 - x: the r = 0 row is [0, 1, 1]
    assert [stirling1_r_unsigned(2, k, 0) for k in range(3)] == [0, 1, 1]
    # (x)_2 = (x+1)^2 - 3(x+1) + 2: the r = 1 row is [2, 3, 1]
    assert [stirling1_r_unsigned(2, k, 1) for k in range(3)] == [2, 3, 1]


@pytest.mark.parametrize("r", range(5))
@pytest.mark.parametrize("n", range(11))
def test_defining_relation(n, r):
    lhs = IntPoly([r, 1]) ** n
    rhs = IntPoly()
    for k in range(n + 1):
        rhs = rhs + _falling_poly(0, k) * stirling2_r(n, k, r)
    assert lhs == rhs


@pytest.mark.parametrize("r", range(5))
@pytest.mark.parametrize("n", range(11))
def test_inverse_relation(n, r):
    lhs = _falling_poly(0, n)
    rhs = IntPoly()
    xr = IntPoly([r, 1])
    for k in range(n + 1):
        rhs = rhs + xr**k * ((-1) ** (n - k) * stirling1_r_unsigned(n, k, r))
    assert lhs == rhs


def test_tables_are_consistent_under_threads():
    tab = StirlingTable("r-second", 3)
    results = []

    def work(n):
        results.append((n, [tab(n, k) for k in range(n + 1)]))

    threads = [threading.Thread(target=work, args=(n,)) for n in range(30, 0, -1)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    fresh = StirlingTable("r-second", 3)
    for n, row in results:
        assert row == [fresh(n, k) for k in range(n + 1)]


def test_set_partitions_rgs_counts():
    for n in range(8):
        assert sum(1 for _ in set_partitions_rgs(n)) == sympy.bell(n)


def _surjection_oracle(n):
    """Ordered partitions of [n] into k blocks are surjections [n] -> [k]."""
    counts = [0] * (n + 1)
    for k in range(n + 1):
        for f in product(range(k), repeat=n):
            if len(set(f)) == k:
                counts[k] += 1
    return IntPoly(counts)


@pytest.mark.parametrize("n", range(8))
def test_oracle_matches_surjection_count(n):
    assert ordered_partition_oracle(n) == _surjection_oracle(n)


@pytest.mark.parametrize("n", range(9))
def test_oracle_matches_stirling_formula(n):
    expected = IntPoly([stirling2(n, k) * math.factorial(k) for k in range(n + 1)])
    assert ordered_partition_oracle(n) == expected


def test_oracle_examples():
    assert ordered_partition_oracle(0) == IntPoly([1])
    assert ordered_partition_oracle(2) == IntPoly([0, 1, 2])
    assert ordered_partition_oracle(3)(1) == 13


def test_oracle_guard():
    with pytest.raises(ResourceLimitError):
        ordered_partition_oracle(11)


def test_weighted_row_sums_increase():
    values = [sum(stirling2_r(n, k, 0) * math.factorial(k) for k in range(n + 1)) for n in range(12)]
    assert all(a < b for a, b in zip(values[1:], values[2:]))
    assert values[:5] == [1, 1, 3, 13, 75]
