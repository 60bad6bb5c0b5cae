"""Registry of checked statements.

Each entry knows its parameter names, how to build both sides, and which
parameter tuples violate the statement's hypotheses. Identity entries
return two ``IntPoly`` sides compared exactly; congruence entries return two
``ModPoly`` sides over Z/pZ. Sums with divisions by integers are computed in
Z/pZ with modular inverses.
"""

from dataclasses import dataclass
import inspect
from fractions import Fraction
import math

from fubini.combinat import stirling2
from fubini.families import (
    MultiRSpec,
    derivative_sides,
    fubini,
    fubini_multi,
    fubini_rs,
    p_poly,
    rl_build,
    t_poly,
)
from fubini.poly import IntPoly, ModPoly, check_prime, mod_inv, reduce_mod
from fubini.scalars import binomial, falling, rising
from fubini.series import (
    egf_series,
    log_egf_rhs,
    log_egf_series,
    series_eval_certified,
)
from fubini.sturm import sturm_count_nonpositive
from fubini.umbra import UmbralExpr, falling_shift, power, umbral_eval
from fubini.verify.family import a_family, poly_family

IDENTITY = "identity"
CONGRUENCE = "congruence"


class Rejected(Exception):
    """Parameters violate the statement's hypotheses."""


class UnknownCheck(KeyError):
    pass


@dataclass(frozen=True)
class Check:
    check_id: str
    kind: str
    params: tuple
    statement: str
    sides: object

    def evaluate(self, params):
        sig = inspect.signature(self.sides).parameters
        if any(v.kind is inspect.Parameter.VAR_KEYWORD for v in sig.values()):
            return self.sides(**params)
        return self.sides(**{k: v for k, v in params.items() if k in sig})


REGISTRY = {}


def _register(check_id, kind, params, statement):
    def deco(fn):
        REGISTRY[check_id] = Check(check_id, kind, tuple(params), statement, fn)
        return fn

    return deco


def lookup(check_id):
    """Case-insensitive registry lookup."""
    for key, check in REGISTRY.items():
        if key.lower() == str(check_id).lower():
            return check
    raise UnknownCheck(check_id)


X = IntPoly.x()
X1 = IntPoly([1, 1])


def _f(seed, index):
    family = poly_family(seed)
    if not 0 <= index < len(family):
        raise Rejected(f"family index {index} out of range")
    return family[index]


def _a(seed, index):
    family = a_family(seed)
    if not 0 <= index < len(family):
        raise Rejected(f"a-family index {index} out of range")
    return family[index]


def _rv(params):
    q = params["q"]
    return MultiRSpec(tuple(params[f"r{i}"] for i in range(1, q + 1)))


def _require(cond, reason):
    if not cond:
        raise Rejected(reason)


def _require_coprime(p, m):
    _require(m % p != 0, f"hypothesis p does not divide m fails (p={p}, m={m})")


def _binomial_basis_sum(values, p):
    """sum_{k<p} values[k] (x+1)^(p-1-k) x^k."""
    out = IntPoly()
    for k in range(p):
        if values[k]:
            out = out + (X1 ** (p - 1 - k)).mul_xk(k) * values[k]
    return out


# ---------------------------------------------------------------- identities


@_register("P0-shift", IDENTITY, ("f", "r"), "(x+1) f(F+r) = x f(F+r+1) + f(r)")
def _p0_shift(f, r, seed=0):
    poly = _f(seed, f)
    e = UmbralExpr.from_poly(poly)
    lhs = X1 * umbral_eval(e.shift(r))
    rhs = X * umbral_eval(e.shift(r + 1)) + poly(r)
    return lhs, rhs


@_register("P0-falling", IDENTITY, ("n", "r"), "(F+r)_{n+r} = (n+r)! x^n (x+1)^r")
def _p0_falling(n, r):
    lhs = umbral_eval(falling_shift(r, n + r))
    rhs = (X1**r).mul_xk(n) * math.factorial(n + r)
    return lhs, rhs


@_register("P0-rs-a", IDENTITY, ("n", "r", "s"), "(F+r-s)^n (F)_s = x^s F_n(x;r,s)")
def _p0_rs_a(n, r, s):
    lhs = umbral_eval(power(n).shift(r - s) * falling_shift(0, s))
    return lhs, fubini_rs(n, r, s).mul_xk(s)


@_register("P0-rs-b", IDENTITY, ("n", "r", "s"), "(F+r)^n (F+s)_s = (x+1)^s F_n(x;r,s)")
def _p0_rs_b(n, r, s):
    lhs = umbral_eval(power(n).shift(r) * falling_shift(s, s))
    return lhs, X1**s * fubini_rs(n, r, s)


@_register(
    "P11", IDENTITY, ("f", "r", "s"), "(x+1)^s f(F+r-s) (F)_s = x^s f(F+r) (F+s)_s"
)
def _p11(f, r, s, seed=0):
    e = UmbralExpr.from_poly(_f(seed, f))
    lhs = X1**s * umbral_eval(e.shift(r - s) * falling_shift(0, s))
    rhs = umbral_eval(e.shift(r) * falling_shift(s, s)).mul_xk(s)
    return lhs, rhs


@_register(
    "R1",
    IDENTITY,
    ("n", "r", "form"),
    "form 0: (F-r-1)_n = n! P_n(x;r); form 1: (F+n+r)_n = n! T_n(x;r)",
)
def _r1(n, r, form):
    if form == 0:
        return umbral_eval(falling_shift(-r - 1, n)), p_poly(n, r) * math.factorial(n)
    if form == 1:
        return umbral_eval(falling_shift(n + r, n)), t_poly(n, r) * math.factorial(n)
    raise Rejected(f"form must be 0 or 1, got {form}")


@_register(
    "P12",
    IDENTITY,
    ("f", "m"),
    "(x+1)^m f(F) - x^m f(F+m) = sum_{k<m} f(k) (x+1)^{m-1-k} x^k, m >= 1",
)
def _p12(f, m, seed=0):
    _require(m >= 1, "statement requires m >= 1")
    poly = _f(seed, f)
    e = UmbralExpr.from_poly(poly)
    lhs = X1**m * umbral_eval(e) - umbral_eval(e.shift(m)).mul_xk(m)
    rhs = IntPoly()
    for k in range(m):
        rhs = rhs + (X1 ** (m - 1 - k)).mul_xk(k) * poly(k)
    return lhs, rhs


@_register(
    "Lemma", IDENTITY, ("n",), "(1+x) F_{n-1}(x) = sum_k S(n,k) (k-1)! x^k, n >= 2"
)
def _lemma(n):
    _require(n >= 2, "statement requires n >= 2")
    rhs = IntPoly([0] + [stirling2(n, k) * math.factorial(k - 1) for k in range(1, n + 1)])
    return X1 * fubini(n - 1), rhs


@_register(
    "Deriv",
    IDENTITY,
    ("n", "r", "s"),
    "x^r (x+1)^s F_{n+1}(x;r,s+r) = x d/dx[x^r (x+1)^{s+1} F_n(x;r,s+r)]",
)
def _deriv(n, r, s):
    return derivative_sides(n, r, s)


@_register(
    "EGF",
    IDENTITY,
    ("n", "r", "s"),
    "n! [t^n] s! e^{rt} (1 - x(e^t - 1))^{-s-1} = F_n(x;r,s)",
)
def _egf(n, r, s):
    lhs = egf_series(r, s, n).egf_values()[n].to_int()
    return lhs, fubini_rs(n, r, s)


@_register(
    "LogEGF",
    IDENTITY,
    ("n", "r", "s"),
    "n! [t^n] log(1 + sum F_k(x;r,s)/s! t^k/k!) = n! [t^n] "
    "((r+(s+1)x) t + (s+1)(x+1) sum_{k>=2} F_{k-1}(x) t^k/k!)",
)
def _log_egf(n, r, s):
    lhs = log_egf_series(r, s, n).egf_values()[n].to_int()
    rhs = log_egf_rhs(r, s, n).egf_values()[n].to_int()
    return lhs, rhs


@_register(
    "Roots",
    IDENTITY,
    ("n", "r", "s"),
    "F_n(x;r,s+r), n >= 1, has only real non-positive roots "
    "(witnesses: distinct roots in (-inf,0] vs squarefree degree)",
)
def _roots(n, r, s):
    _require(n >= 1, "statement requires n >= 1")
    count, degree = sturm_count_nonpositive(fubini_rs(n, r, s + r))
    return IntPoly([count]), IntPoly([degree])


SERIES_X_GRID = ((0, 1), (1, 2), (1, 1), (2, 1))
SERIES_EPS_LOG2 = 30


def _series_witness(exact, approx, bound, eps):
    # the right witness is the exact value exactly when the certificate holds
    ok = bound <= eps and abs(approx - exact) <= eps
    return [exact], [exact if ok else approx]


@_register(
    "SeriesT",
    IDENTITY,
    ("f", "xn", "xd"),
    "f(F_x) = 1/(1+x) sum_k f(k) (x/(1+x))^k at x = xn/xd, within 2^-30",
)
def _series_t(f, xn, xd, seed=0):
    _require(xd > 0 and xn >= 0, "certified evaluation needs x >= 0")
    poly = _f(seed, f)
    x = Fraction(xn, xd)
    eps = Fraction(1, 2**SERIES_EPS_LOG2)
    exact = umbral_eval(UmbralExpr.from_poly(poly))(x)
    got = series_eval_certified(poly, x, eps)
    return _series_witness(exact, got.value, got.tail_bound, eps)


@_register(
    "SeriesC",
    IDENTITY,
    ("n", "r", "s", "xn", "xd"),
    "F_n(x;r,s) = s!/(1+x)^{s+1} sum_k C(k+s,s) (k+r)^n (x/(1+x))^k at x = xn/xd, "
    "within 2^-30",
)
def _series_c(n, r, s, xn, xd):
    _require(xd > 0 and xn >= 0, "certified evaluation needs x >= 0")
    x = Fraction(xn, xd)
    eps = Fraction(1, 2**SERIES_EPS_LOG2)
    # f(u) = (u+r)^n (u+s)_s has f(k) = s! C(k+s,s) (k+r)^n
    coeffs = [c[0] if c.coeffs else 0 for c in (power(n).shift(r) * falling_shift(s, s)).coeffs]
    got = series_eval_certified(IntPoly(coeffs), x, eps)
    approx = got.value / (1 + x) ** s
    exact = fubini_rs(n, r, s)(x)
    return _series_witness(exact, approx, got.tail_bound, eps)


# --------------------------------------------------------------- congruences


def _mod(a, p):
    return reduce_mod(a, p)


@_register(
    "C3",
    CONGRUENCE,
    ("p", "f"),
    "sum_{k<p} f(k) (x+1)^{p-1-k} x^k == f(F) (mod p)",
)
def _c3(p, f, seed=0):
    poly = _f(seed, f)
    lhs = _binomial_basis_sum([poly(k) for k in range(p)], p)
    rhs = umbral_eval(UmbralExpr.from_poly(poly))
    return _mod(lhs, p), _mod(rhs, p)


@_register(
    "C3-rs-a",
    CONGRUENCE,
    ("p", "n", "r", "s"),
    "sum_{k<p} (r-s+k)^n (k)_s (x+1)^{p-1-k} x^k == x^s F_n(x;r,s) (mod p)",
)
def _c3_rs_a(p, n, r, s):
    lhs = _binomial_basis_sum([(r - s + k) ** n * falling(k, s) for k in range(p)], p)
    return _mod(lhs, p), _mod(fubini_rs(n, r, s).mul_xk(s), p)


@_register(
    "C3-rs-b",
    CONGRUENCE,
    ("p", "n", "r", "s"),
    "sum_{k<p} (r+k)^n (s+k)_s (x+1)^{p-1-k} x^k == (x+1)^s F_n(x;r,s) (mod p)",
)
def _c3_rs_b(p, n, r, s):
    lhs = _binomial_basis_sum([(r + k) ** n * falling(s + k, s) for k in range(p)], p)
    return _mod(lhs, p), _mod(X1**s * fubini_rs(n, r, s), p)


@_register(
    "Fermat-prod",
    CONGRUENCE,
    ("p", "f", "g"),
    "(f(F))^p g(F) == f(F) g(F) (mod p)",
)
def _fermat_prod(p, f, g, seed=0):
    ef = UmbralExpr.from_poly(_f(seed, f))
    eg = UmbralExpr.from_poly(_f(seed, g))
    lhs = umbral_eval(_power_cached(seed, f, p) * eg)
    rhs = umbral_eval(ef * eg)
    return _mod(lhs, p), _mod(rhs, p)


_POWERS = {}


def _power_cached(seed, f, p):
    key = (seed, f, p)
    e = _POWERS.get(key)
    if e is None:
        e = _POWERS[key] = UmbralExpr.from_poly(_f(seed, f)) ** p
    return e


@_register(
    "IndexRed",
    CONGRUENCE,
    ("p", "m", "q", "r", "s"),
    "F_{mp+q}(x;r,s) == F_{m+q}(x;r,s) (mod p)",
)
def _index_red(p, m, q, r, s):
    return _mod(fubini_rs(m * p + q, r, s), p), _mod(fubini_rs(m + q, r, s), p)


@_register(
    "P21",
    CONGRUENCE,
    ("p", "m", "r", "s"),
    "(x+1)^{s+1} (F_{m(p-1)}(x;r,s) - s!) == -(s-r')_s (x+1)^{r'} x^{p-r'} if r' != 0, "
    "-s! (x^p + 1) if r' = 0, where r' = r mod p; m >= 1",
)
def _p21(p, m, r, s):
    _require(m >= 1, "statement requires m >= 1")
    lhs = X1 ** (s + 1) * (fubini_rs(m * (p - 1), r, s) - math.factorial(s))
    rp = r % p
    if rp:
        rhs = (X1**rp).mul_xk(p - rp) * (-falling(s - rp, s))
    else:
        rhs = (IntPoly.monomial(p) + 1) * (-math.factorial(s))
    return _mod(lhs, p), _mod(rhs, p)


def _inv_powers(m, p, upto):
    """[(-m)^{-k} mod p for k = 0..upto]."""
    inv = mod_inv(-m, p)
    out = [1]
    for _ in range(upto):
        out.append(out[-1] * inv % p)
    return out


@_register(
    "T1",
    CONGRUENCE,
    ("p", "n", "m", "r", "s"),
    "sum_{k=1}^{p-1} F_{n+k}(x;r,s)/(-m)^k == (-m)^n (F_{p-1}(x;r+m,s) - s!) (mod p), p !| m",
)
def _t1(p, n, m, r, s):
    _require_coprime(p, m)
    w = _inv_powers(m, p, p - 1)
    lhs = ModPoly._raw(p, [])
    for k in range(1, p):
        lhs = lhs + _mod(fubini_rs(n + k, r, s), p).scale(w[k])
    rhs = _mod(fubini_rs(p - 1, r + m, s) - math.factorial(s), p).scale((-m) ** n)
    return lhs, rhs


@_register(
    "PropP",
    CONGRUENCE,
    ("p", "n", "m", "q"),
    "x^{r_q} sum_{k=1}^{p-1} F_{n+k}(x;r_1..r_q)/(-m)^k "
    "== (-m)^n (-m)_{r_1}...(-m)_{r_q} (F_{p-1}(x;m,0) - 1) (mod p), p !| m",
)
def _prop_p(p, n, m, q, **rs):
    spec = _rv({"q": q, **rs})
    _require_coprime(p, m)
    w = _inv_powers(m, p, p - 1)
    lhs = ModPoly._raw(p, [])
    for k in range(1, p):
        lhs = lhs + _mod(fubini_multi(n + k, spec), p).scale(w[k])
    lhs = lhs * _mod(IntPoly.monomial(spec.top), p)
    coeff = (-m) ** n * spec.falling_product(-m)
    rhs = _mod(fubini_rs(p - 1, m, 0) - 1, p).scale(coeff)
    return lhs, rhs


@_register(
    "RemarkA",
    CONGRUENCE,
    ("p", "m", "j", "q"),
    "F_{mp+j}(x;r_1..r_q) == F_{m+j}(x;r_1..r_q) (mod p)",
)
def _remark_a(p, m, j, q, **rs):
    spec = _rv({"q": q, **rs})
    return _mod(fubini_multi(m * p + j, spec), p), _mod(fubini_multi(m + j, spec), p)


@_register(
    "RemarkB",
    CONGRUENCE,
    ("p", "m", "q"),
    "F_{m(p-1)}(x;r_1..r_q) == F_0(x;r_1..r_q) (mod p) when r_1...r_q != 0",
)
def _remark_b(p, m, q, **rs):
    spec = _rv({"q": q, **rs})
    _require(q >= 1 and all(spec.rs), "statement requires r_1 ... r_q != 0")
    return _mod(fubini_multi(m * (p - 1), spec), p), _mod(fubini_multi(0, spec), p)


@_register(
    "CC",
    CONGRUENCE,
    ("p", "n", "m", "r", "s", "a"),
    "sum_{k=1}^{p-1} R_{n+k,t}(x;r,s)/(-m)^k == (-m)^n L_t(x,-m) (F_{p-1}(x;r+m,s) - s!) "
    "(mod p), p !| m",
)
def _cc(p, n, m, r, s, a, seed=0):
    _require_coprime(p, m)
    avec = _a(seed, a)
    w = _inv_powers(m, p, p - 1)
    lhs = ModPoly._raw(p, [])
    for k in range(1, p):
        R, _ = rl_build(avec, n + k, r, s)
        lhs = lhs + _mod(R, p).scale(w[k])
    _, L_at = rl_build(avec, 0, 0, 0)
    rhs = _mod(L_at(-m) * (fubini_rs(p - 1, r + m, s) - math.factorial(s)), p)
    return lhs, rhs.scale((-m) ** n)


@_register(
    "T2",
    CONGRUENCE,
    ("p", "n", "m", "r"),
    "sum_{k=m}^{p-1} (-x)^k F_n(x;r+k,k)/(k-m)! == (-1)^m m! (r+m)^n P_{p-1}(x;m) "
    "(mod p), 0 <= m <= p-1",
)
def _t2(p, n, m, r):
    _require(m <= p - 1, "statement requires m in {0, ..., p-1}")
    lhs = ModPoly._raw(p, [])
    for k in range(m, p):
        c = (-1) ** k * mod_inv(math.factorial(k - m), p)
        lhs = lhs + _mod(fubini_rs(n, r + k, k).mul_xk(k), p).scale(c)
    rhs = p_poly(p - 1, m) * ((-1) ** m * math.factorial(m) * (r + m) ** n)
    return lhs, _mod(rhs, p)


@_register(
    "T2-m0",
    CONGRUENCE,
    ("p", "n", "r"),
    "sum_{k=0}^{p-1} (-x)^k F_n(x;r+k,k)/k! == r^n (1 + x + ... + x^{p-1}) (mod p)",
)
def _t2_m0(p, n, r):
    lhs = ModPoly._raw(p, [])
    for k in range(p):
        c = (-1) ** k * mod_inv(math.factorial(k), p)
        lhs = lhs + _mod(fubini_rs(n, r + k, k).mul_xk(k), p).scale(c)
    rhs = IntPoly([1] * p) * r**n
    return lhs, _mod(rhs, p)


@_register(
    "T3",
    CONGRUENCE,
    ("p", "n", "m", "r"),
    "sum_{k<p} (-m)_{p-1-k} (x+1)^k F_n(x;r+m,k) == -r^n T_{p-1}(x;m) (mod p)",
)
def _t3(p, n, m, r):
    lhs = IntPoly()
    for k in range(p):
        c = falling(-m, p - 1 - k)
        if c:
            lhs = lhs + X1**k * fubini_rs(n, r + m, k) * c
    return _mod(lhs, p), _mod(t_poly(p - 1, m) * (-(r**n)), p)


@_register(
    "T4",
    CONGRUENCE,
    ("p", "n", "m", "r"),
    "sum_{k<p} <m+r+1>_{p-1-k} T_{n+k}(x;r) == -(m+r+n)_n P_{p-1}(x;m+1) (mod p)",
)
def _t4(p, n, m, r):
    lhs = IntPoly()
    for k in range(p):
        lhs = lhs + t_poly(n + k, r) * rising(m + r + 1, p - 1 - k)
    rhs = p_poly(p - 1, m + 1) * (-falling(m + r + n, n))
    return _mod(lhs, p), _mod(rhs, p)


@_register(
    "FinalCor",
    CONGRUENCE,
    ("p", "n", "m", "r", "a"),
    "sum_{k=m}^{p-1} (-x)^k C(k,m) R_{n,t}(x;r+k,k)/k! "
    "== (-1)^m (r+m)^n L_t(x,r+m) P_{p-1}(x;m) (mod p), p !| m, m <= p-1",
)
def _final_cor(p, n, m, r, a, seed=0):
    _require_coprime(p, m)
    # the sum over k = m..p-1 is the one in T2, whose range m <= p-1 it inherits
    _require(m <= p - 1, "sum range k = m..p-1 needs m <= p-1 (inherited from T2)")
    return final_cor_sides(p, n, m, r, _a(seed, a))


def final_cor_sides(p, n, m, r, avec):
    """Both sides of FinalCor without any hypothesis filtering."""
    lhs = ModPoly._raw(p, [])
    for k in range(m, p):
        R, _ = rl_build(avec, n, r + k, k)
        c = (-1) ** k * binomial(k, m) * mod_inv(math.factorial(k), p)
        lhs = lhs + _mod(R.mul_xk(k), p).scale(c)
    _, L_at = rl_build(avec, 0, 0, 0)
    rhs = L_at(r + m) * p_poly(p - 1, m) * ((-1) ** m * (r + m) ** n)
    return lhs, _mod(rhs, p)


def identity_ids():
    return [k for k, c in REGISTRY.items() if c.kind == IDENTITY]


def congruence_ids():
    return [k for k, c in REGISTRY.items() if c.kind == CONGRUENCE]


def validate_prime(p):
    return check_prime(p)
