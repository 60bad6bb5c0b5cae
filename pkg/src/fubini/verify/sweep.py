"""Running registered checks, singly or over a parameter grid."""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product

from fubini.poly import IntPoly, ModPoly, check_prime
from fubini.report import FAIL, PASS, REJECTED, XFAIL, CheckReport
from fubini.verify.family import a_family, poly_family
from fubini.verify.registry import (
    CONGRUENCE,
    IDENTITY,
    REGISTRY,
    SERIES_X_GRID,
    Rejected,
    lookup,
)

DEFAULT_PRIMES = (2, 3, 5, 7, 11, 13)
DEFAULT_EXPECTED_FAIL = frozenset({"T4", "T2-m0"})


def _witness(side):
    if isinstance(side, (IntPoly, ModPoly)):
        return tuple(side.coeffs)
    return tuple(side)


def run_check(check_id, params, expected_fail=frozenset()):
    """Evaluate one registered statement at one parameter tuple."""
    check = lookup(check_id)
    params = dict(params)
    modulus = params.get("p") if check.kind == CONGRUENCE else None
    try:
        if modulus is not None:
            check_prime(modulus)
        lhs, rhs = check.evaluate(params)
    except Rejected as exc:
        return CheckReport(
            check.check_id, params, REJECTED, modulus=modulus, message=str(exc),
            statement=check.statement,
        )
    lw, rw = _witness(lhs), _witness(rhs)
    if lw == rw:
        status, message = PASS, ""
    elif check.check_id in expected_fail:
        status, message = XFAIL, "known discrepancy reproduced"
    else:
        status, message = FAIL, "sides differ"
    return CheckReport(
        check.check_id, params, status, lw, rw, modulus, message, statement=check.statement
    )


def check_identity(check_id, params, expected_fail=frozenset()):
    if lookup(check_id).kind != IDENTITY:
        raise ValueError(f"{check_id} is not an identity check")
    return run_check(check_id, params, expected_fail)


def check_congruence(check_id, params, expected_fail=DEFAULT_EXPECTED_FAIL):
    if lookup(check_id).kind != CONGRUENCE:
        raise ValueError(f"{check_id} is not a congruence check")
    return run_check(check_id, params, expected_fail)


@dataclass
class SweepPlan:
    check_ids: list = field(default_factory=lambda: list(REGISTRY))
    primes: tuple = DEFAULT_PRIMES
    n_max: int = 6
    m_max: int = 6
    r_max: int = 4
    s_max: int = 4
    q_max: int = 2
    seed: int = 0
    expected_fail: frozenset = DEFAULT_EXPECTED_FAIL
    jobs: int = 1

    def __post_init__(self):
        self.check_ids = [lookup(c).check_id for c in self.check_ids]
        self.expected_fail = frozenset(lookup(c).check_id for c in self.expected_fail)
        for p in self.primes:
            check_prime(p)
        for name in ("n_max", "m_max", "r_max", "s_max", "q_max", "seed"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")


def _multi_r_vectors(q_max, r_max):
    for q in range(q_max + 1):
        for rs in combinations_with_replacement(range(r_max + 1), q):
            yield {"q": q, **{f"r{i + 1}": v for i, v in enumerate(rs)}}


def _ranges(plan):
    # family sizes follow the seed's families; indices are params
    nf = len(poly_family(plan.seed))
    na = len(a_family(plan.seed))
    return {
        "p": list(plan.primes),
        "n": range(plan.n_max + 1),
        "m": range(plan.m_max + 1),
        "r": range(plan.r_max + 1),
        "s": range(plan.s_max + 1),
        "q": range(plan.q_max + 1),
        "j": range(plan.q_max + 1),
        "f": range(nf),
        "g": range(nf),
        "a": range(na),
        "form": range(2),
    }


def grid(check_id, plan):
    """Parameter tuples for one check, in canonical order."""
    check = lookup(check_id)
    ranges = _ranges(plan)
    names = list(check.params)
    multi = check.check_id in ("PropP", "RemarkA", "RemarkB")
    series_x = "xn" in names
    base = [n for n in names if n not in ("xn", "xd") and not (multi and n == "q")]
    extra = {}
    if any(n in names for n in ("f", "g", "a")):
        extra["seed"] = plan.seed
    out = []
    for values in product(*(ranges[n] for n in base)):
        params = dict(zip(base, values))
        tails = [{}]
        if multi:
            tails = list(_multi_r_vectors(plan.q_max, plan.r_max))
        if series_x:
            tails = [{**t, "xn": xn, "xd": xd} for t in tails for xn, xd in SERIES_X_GRID]
        for t in tails:
            out.append({**params, **t, **extra})
    out.sort(key=lambda d: tuple(sorted(d.items())))
    return out


def _run_task(task):
    check_id, params, expected_fail = task
    return run_check(check_id, params, expected_fail)


@dataclass
class SweepResult:
    reports: list
    summary: dict


def summarize(reports):
    summary = {s: 0 for s in (PASS, FAIL, XFAIL, REJECTED)}
    summary["total"] = len(reports)
    for rep in reports:
        summary[rep.status] += 1
    return summary


def sweep(plan):
    """Run every planned check over its grid.

    Output order is (check_id, sorted params) and does not depend on
    ``plan.jobs``; workers only change who computes each report.
    """
    tasks = [
        (cid, params, plan.expected_fail)
        for cid in sorted(set(plan.check_ids))
        for params in grid(cid, plan)
    ]
    if plan.jobs == 1 or len(tasks) < 2:
        reports = [_run_task(t) for t in tasks]
    else:
        chunk = max(1, len(tasks) // (plan.jobs * 8))
        with ProcessPoolExecutor(max_workers=plan.jobs) as pool:
            reports = list(pool.map(_run_task, tasks, chunksize=chunk))
    reports.sort(key=CheckReport.sort_key)
    return SweepResult(reports, summarize(reports))
