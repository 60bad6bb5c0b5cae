"""Polynomial families: Fubini, (r,s)-Fubini, multi-r Fubini, P_n, T_n,
and the R_{n,t} / L_t combinations.
"""

from dataclasses import dataclass, field
from functools import lru_cache
import math

from fubini.combinat import stirling2, stirling2_r
from fubini.poly import DivisibilityError, IntPoly
from fubini.report import FAIL, PASS, CheckReport
from fubini.scalars import binomial, falling
from fubini.sturm import sturm_count_nonpositive


class InternalConsistencyError(AssertionError):
    pass


@lru_cache(maxsize=None)
def fubini(n):
    """F_n(x) = sum_k S(n, k) k! x^k."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return IntPoly._raw([stirling2(n, k) * math.factorial(k) for k in range(n + 1)])


@lru_cache(maxsize=None)
def fubini_rs(n, r, s):
    """F_n(x; r, s) = sum_k S_r(n+r, k+r) (k+s)! x^k."""
    if min(n, r, s) < 0:
        raise ValueError("n, r, s must be non-negative")
    return IntPoly._raw(
        [stirling2_r(n, k, r) * math.factorial(k + s) for k in range(n + 1)]
    )


@dataclass(frozen=True)
class MultiRSpec:
    """Ascending vector 0 <= r_1 <= ... <= r_q and the coefficients ``a`` of
    ``(u)_{r_1} ... (u)_{r_q} = sum_k a[k] u^k``."""

    rs: tuple
    a: tuple = field(init=False, repr=False)

    def __post_init__(self):
        rs = tuple(int(v) for v in self.rs)
        if any(v < 0 for v in rs) or list(rs) != sorted(rs):
            raise ValueError(f"rs must be ascending non-negative integers, got {rs}")
        object.__setattr__(self, "rs", rs)
        c = [1]
        for r in rs:
            for i in range(r):
                nxt = [0] * (len(c) + 1)
                for j, v in enumerate(c):
                    nxt[j] -= i * v
                    nxt[j + 1] += v
                c = nxt
        object.__setattr__(self, "a", tuple(c))

    @property
    def q(self):
        return len(self.rs)

    @property
    def top(self):
        """r_q, the largest entry (0 for the empty vector)."""
        return self.rs[-1] if self.rs else 0

    def falling_product(self, y):
        """(y)_{r_1} ... (y)_{r_q} for an integer y."""
        out = 1
        for r in self.rs:
            out *= falling(y, r)
        return out


@lru_cache(maxsize=None)
def fubini_multi(n, spec):
    """F_n(x; r_1..r_q) from x^{r_q} F_n(x; r) = sum_k a_k F_{n+k}(x)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    total = IntPoly._raw([])
    for k, ak in enumerate(spec.a):
        if ak:
            total = total + fubini(n + k) * ak
    try:
        return total.div_xk(spec.top)
    except DivisibilityError as exc:
        raise InternalConsistencyError(
            f"sum a_k F_(n+k) not divisible by x^{spec.top} for n={n}, rs={spec.rs}"
        ) from exc


@lru_cache(maxsize=None)
def p_poly(n, r):
    """P_n(x; r) = sum_j (-1)^j C(j+r, r) x^(n-j)."""
    if min(n, r) < 0:
        raise ValueError("n, r must be non-negative")
    c = [0] * (n + 1)
    for j in range(n + 1):
        c[n - j] = (-1) ** j * binomial(j + r, r)
    return IntPoly._raw(c)


@lru_cache(maxsize=None)
def t_poly(n, r):
    """T_n(x; r) = sum_j C(n+r, j+r) x^j."""
    if min(n, r) < 0:
        raise ValueError("n, r must be non-negative")
    return IntPoly._raw([binomial(n + r, j + r) for j in range(n + 1)])


def rl_build(a, n, r, s):
    """R_{n,t}(x; r, s) = sum_i a_i(x) F_{n+i}(x; r, s), and y -> L_t(x, y)."""
    a = [c if isinstance(c, IntPoly) else IntPoly([c]) for c in a]
    if not a:
        raise ValueError("coefficient sequence must be nonempty")
    R = IntPoly._raw([])
    for i, ai in enumerate(a):
        if ai:
            R = R + ai * fubini_rs(n + i, r, s)

    def L_at(y):
        out = IntPoly._raw([])
        for i, ai in enumerate(a):
            out = out + ai * (y**i)
        return out

    return R, L_at


def real_roots_certify(n, r, s):
    """Sturm certificate that F_n(x; r, s+r) has only real non-positive roots."""
    if n < 1:
        raise ValueError("n must be at least 1")
    f = fubini_rs(n, r, s + r)
    count, sqf_degree = sturm_count_nonpositive(f)
    return CheckReport(
        check_id="Roots",
        params={"n": n, "r": r, "s": s},
        status=PASS if count == sqf_degree else FAIL,
        lhs=(count,),
        rhs=(sqf_degree,),
        message=(
            f"F_{n}(x;{r},{s + r}) = {f}: {count} distinct roots in (-inf, 0], "
            f"squarefree degree {sqf_degree}"
        ),
    )


def derivative_sides(n, r, s):
    """Both sides of x^r (x+1)^s F_{n+1}(x; r, s+r)
    = x d/dx [x^r (x+1)^{s+1} F_n(x; r, s+r)]."""
    x1 = IntPoly([1, 1])
    lhs = (x1**s * fubini_rs(n + 1, r, s + r)).mul_xk(r)
    inner = (x1 ** (s + 1) * fubini_rs(n, r, s + r)).mul_xk(r)
    rhs = inner.derivative().mul_xk(1)
    return lhs, rhs


def derivative_identity_check(n, r, s):
    lhs, rhs = derivative_sides(n, r, s)
    return CheckReport(
        check_id="Deriv",
        params={"n": n, "r": r, "s": s},
        status=PASS if lhs == rhs else FAIL,
        lhs=lhs.coeffs,
        rhs=rhs.coeffs,
    )
