"""Command-line front end.

stdout carries data, stderr carries diagnostics. Exit codes: 0 all checks
pass (reproduced expected failures count as passing), 1 a check failed,
2 usage or guard error.
"""

import argparse
import contextlib
import csv
import json
import os
import re
import sys
from fractions import Fraction

from fubini.combinat import ResourceLimitError, ordered_partition_oracle
from fubini.families import (
    MultiRSpec,
    fubini,
    fubini_multi,
    fubini_rs,
    p_poly,
    real_roots_certify,
    t_poly,
)
from fubini.poly import IntPoly, NotPrimeError, check_prime, mod_inv, reduce_mod
from fubini.report import FAIL, PASS, CheckReport
from fubini.series import (
    GuardError,
    egf_series,
    log_egf_rhs,
    log_egf_series,
    series_eval_certified,
)
from fubini.umbra import UmbralExpr, umbral_eval
from fubini.verify import DEFAULT_EXPECTED_FAIL, DEFAULT_PRIMES, REGISTRY, SweepPlan, sweep
from fubini.verify.registry import UnknownCheck

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _nonneg(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _positive(text):
    v = _nonneg(text)
    if v < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def _prime(text):
    v = _nonneg(text)
    try:
        return check_prime(v)
    except NotPrimeError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list(text):
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _prime_list(text):
    return [_prime(t) for t in text.split(",") if t.strip()]


_RATIONAL = re.compile(r"[+-]?\d+(/\d+)?")


def _rational(text):
    text = text.strip()
    if not _RATIONAL.fullmatch(text):
        raise argparse.ArgumentTypeError(f"expected NUM or NUM/DEN, got {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise argparse.ArgumentTypeError(f"zero denominator in {text!r}") from None


def _id_list(text):
    if text.strip().lower() in ("", "none"):
        return []
    return [t.strip() for t in text.split(",") if t.strip()]


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fubini", description="Fubini polynomials: compute families and verify statements."
    )
    parser.add_argument("--format", choices=("json", "csv", "text"), default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="coefficients (low to high) of a polynomial family member")
    p.add_argument("--kind", required=True, choices=("fubini", "rs", "multi", "P", "T"))
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--r", type=_nonneg)
    p.add_argument("--s", type=_nonneg)
    p.add_argument("--rs", type=_int_list)
    p.add_argument("--at", type=_rational)
    p.add_argument("--mod", type=_prime)

    p = sub.add_parser("oracle", help="ordered set partitions of [n], counted by blocks")
    p.add_argument("--n", type=_nonneg, required=True)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument("--checks", type=_id_list, default=None)
    p.add_argument("--primes", type=_prime_list, default=list(DEFAULT_PRIMES))
    p.add_argument("--n-max", type=_nonneg, default=6)
    p.add_argument("--m-max", type=_nonneg, default=6)
    p.add_argument("--r-max", type=_nonneg, default=4)
    p.add_argument("--s-max", type=_nonneg, default=4)
    p.add_argument("--q-max", type=_nonneg, default=2)
    p.add_argument("--seed", type=_nonneg, default=0)
    p.add_argument("--expect-fail", type=_id_list, default=None)
    p.add_argument("--jobs", type=_positive, default=None)
    p.add_argument("--list", action="store_true", help="list registered checks and exit")

    p = sub.add_parser("series", help="exact generating-function comparison")
    p.add_argument("--check", required=True, choices=("egf", "log"))
    p.add_argument("--order", type=_nonneg, required=True)
    p.add_argument("--r", type=_nonneg, default=0)
    p.add_argument("--s", type=_nonneg, default=0)

    p = sub.add_parser("roots", help="Sturm certificate for real non-positive roots")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--r", type=_nonneg, default=0)
    p.add_argument("--s", type=_nonneg, default=0)

    p = sub.add_parser("eval-series", help="certified series value of f(F_x)")
    p.add_argument("--f", type=_int_list, required=True, help="coefficients c0,c1,... of f(u)")
    p.add_argument("--x", type=_rational, required=True)
    p.add_argument("--eps", type=_rational, required=True)
    return parser


def _emit(out, fmt, payload, text):
    if fmt == "json":
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write(text + "\n")


def _coeff_text(coeffs):
    return ",".join(str(c) for c in coeffs) if coeffs else "0"


def cmd_poly(args, out):
    kind = args.kind
    needs = {"fubini": set(), "rs": {"r", "s"}, "multi": {"rs"}, "P": {"r"}, "T": {"r"}}[kind]
    given = {k for k in ("r", "s", "rs") if getattr(args, k) is not None}
    if given - needs:
        raise UsageError(f"--kind {kind} does not take {', '.join('--' + g for g in sorted(given - needs))}")
    if kind in ("rs", "P", "T") and args.r is None:
        raise UsageError(f"--kind {kind} requires --r")
    if kind == "rs" and args.s is None:
        raise UsageError("--kind rs requires --s")
    if kind == "multi" and args.rs is None:
        raise UsageError("--kind multi requires --rs")
    if kind == "fubini":
        poly = fubini(args.n)
    elif kind == "rs":
        poly = fubini_rs(args.n, args.r, args.s)
    elif kind == "multi":
        try:
            spec = MultiRSpec(tuple(args.rs))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        poly = fubini_multi(args.n, spec)
    elif kind == "P":
        poly = p_poly(args.n, args.r)
    else:
        poly = t_poly(args.n, args.r)

    if args.mod is not None:
        red = reduce_mod(poly, args.mod)
        if args.at is not None:
            den = args.at.denominator
            if den % args.mod == 0:
                raise UsageError(f"denominator {den} is not invertible mod {args.mod}")
            val = red(args.at.numerator * mod_inv(den, args.mod) % args.mod)
            _emit(out, args.format, {"value": str(val), "modulus": args.mod}, str(val))
        else:
            _emit(out, args.format, {"coeffs": [str(c) for c in red.coeffs], "modulus": args.mod},
                  _coeff_text(red.coeffs))
    elif args.at is not None:
        val = poly(args.at)
        _emit(out, args.format, {"value": str(val)}, str(val))
    else:
        _emit(out, args.format, {"coeffs": [str(c) for c in poly.coeffs]}, _coeff_text(poly.coeffs))
    return EXIT_OK


def cmd_oracle(args, out):
    poly = ordered_partition_oracle(args.n)
    _emit(out, args.format, {"coeffs": [str(c) for c in poly.coeffs]}, _coeff_text(poly.coeffs))
    return EXIT_OK


def _write_reports(reports, fmt, out):
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["check_id", "params", "status", "modulus"])
        for rep in reports:
            params = ";".join(f"{k}={v}" for k, v in sorted(rep.params.items()))
            w.writerow([rep.check_id, params, rep.status, "" if rep.modulus is None else rep.modulus])
    elif fmt == "text":
        for rep in reports:
            params = " ".join(f"{k}={v}" for k, v in sorted(rep.params.items()))
            out.write(f"{rep.check_id} {params} {rep.status}\n")
    else:
        for rep in reports:
            out.write(json.dumps(rep.to_dict(), sort_keys=True) + "\n")


def _jobs(args):
    if args.jobs is not None:
        return args.jobs
    env = os.environ.get("FUB_JOBS")
    if env is None:
        return 1
    try:
        return _positive(env)
    except argparse.ArgumentTypeError as exc:
        raise UsageError(f"FUB_JOBS: {exc}") from None


def cmd_verify(args, out, err):
    if args.list:
        for cid, check in REGISTRY.items():
            out.write(f"{cid}\t{check.kind}\t{','.join(check.params)}\t{check.statement}\n")
        return EXIT_OK
    plan = SweepPlan(
        check_ids=args.checks if args.checks is not None else list(REGISTRY),
        primes=tuple(args.primes),
        n_max=args.n_max,
        m_max=args.m_max,
        r_max=args.r_max,
        s_max=args.s_max,
        q_max=args.q_max,
        seed=args.seed,
        expected_fail=(
            frozenset(args.expect_fail) if args.expect_fail is not None else DEFAULT_EXPECTED_FAIL
        ),
        jobs=_jobs(args),
    )
    result = sweep(plan)
    _write_reports(result.reports, args.format or "json", out)
    s = result.summary
    err.write(
        f"summary: total={s['total']} pass={s['pass']} fail={s['fail']} "
        f"expected-fail-reproduced={s['expected-fail-reproduced']} rejected={s['rejected']}\n"
    )
    return EXIT_FAIL if s["fail"] else EXIT_OK


def cmd_series(args, out, err):
    order = args.order
    if args.check == "egf":
        got = egf_series(args.r, args.s, order).egf_values()
        want = [fubini_rs(n, args.r, args.s).to_rat() for n in range(order + 1)]
        statement = "n! [t^n] s! e^{rt} (1 - x(e^t - 1))^{-s-1} = F_n(x;r,s)"
        cid = "EGF"
    else:
        got = log_egf_series(args.r, args.s, order).egf_values()
        want = log_egf_rhs(args.r, args.s, order).egf_values()
        statement = "log-EGF of F_n(x;r,s)/s! against its closed form"
        cid = "LogEGF"
    reports = [
        CheckReport(
            cid, {"n": n, "r": args.r, "s": args.s}, PASS if g == w else FAIL,
            g.coeffs, w.coeffs, statement=statement,
        )
        for n, (g, w) in enumerate(zip(got, want))
    ]
    _write_reports(reports, args.format or "json", out)
    failed = sum(rep.status == FAIL for rep in reports)
    err.write(f"summary: order={order} mismatches={failed}\n")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_roots(args, out):
    rep = real_roots_certify(args.n, args.r, args.s)
    fmt = args.format or "json"
    if fmt == "json":
        payload = rep.to_dict()
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write(f"{rep.status}: {rep.message}\n")
    return EXIT_OK if rep.status == PASS else EXIT_FAIL


def cmd_eval_series(args, out):
    f = IntPoly(args.f)
    try:
        res = series_eval_certified(f, args.x, args.eps)
    except ValueError as exc:
        raise GuardError(str(exc)) from None
    exact = umbral_eval(UmbralExpr.from_poly(f))(args.x)
    if args.format == "json":
        payload = {
            "value": str(res.value),
            "terms": res.terms,
            "tail_bound": str(res.tail_bound),
            "exact": str(exact),
            "within_eps": abs(res.value - exact) <= args.eps,
        }
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write(f"{res.value}\n")
    return EXIT_OK if abs(res.value - exact) <= args.eps else EXIT_FAIL


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _dispatch(args, out, err)
    except (UsageError, GuardError, ResourceLimitError, NotPrimeError, UnknownCheck) as exc:
        msg = exc.args[0] if isinstance(exc, UnknownCheck) else exc
        err.write(f"error: {msg}\n")
        err.write(parser.format_usage())
        return EXIT_USAGE
    except BrokenPipeError:
        # downstream closed stdout (e.g. piped into head); silence the flush at exit
        if out is sys.stdout:
            devnull = os.open(os.devnull, os.O_WRONLY)
            os.dup2(devnull, sys.stdout.fileno())
        return EXIT_OK


def _dispatch(args, out, err):
    if args.command == "poly":
        return cmd_poly(args, out)
    if args.command == "oracle":
        return cmd_oracle(args, out)
    if args.command == "verify":
        return cmd_verify(args, out, err)
    if args.command == "series":
        return cmd_series(args, out, err)
    if args.command == "roots":
        return cmd_roots(args, out)
    return cmd_eval_series(args, out)


if __name__ == "__main__":
    sys.exit(main())
