import io
import json
from fractions import Fraction
import os
import subprocess
import sys

import pytest

from fubini.cli import main
from fubini.families import fubini_rs


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_poly_examples():
    assert run("poly", "--kind", "fubini", "--n", "3")[1].strip() == "0,1,6,6"
    assert run("poly", "--kind", "rs", "--n", "0", "--r", "5", "--s", "3")[1].strip() == "6"
    assert run("poly", "--kind", "fubini", "--n", "3", "--at", "1/2")[1].strip() == "11/4"
    assert run("poly", "--kind", "multi", "--n", "1", "--rs", "1")[1].strip() == "1,2"
    assert run("poly", "--kind", "P", "--n", "2", "--r", "1")[1].strip() == "3,-2,1"
    assert run("poly", "--kind", "T", "--n", "2", "--r", "0")[1].strip() == "1,2,1"


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
@pytest.mark.parametrize("n, r, s", [(0, 0, 0), (3, 1, 1), (5, 2, 3), (7, 4, 0)])
def test_poly_mod_matches_reduction(n, r, s, p):
    args = ["poly", "--kind", "rs", "--n", str(n), "--r", str(r), "--s", str(s)]
    full = [int(c) for c in run(*args)[1].strip().split(",")]
    reduced = [c % p for c in full]
    while reduced and reduced[-1] == 0:
        reduced.pop()
    text = run(*args, "--mod", str(p))[1].strip()
    assert text == (",".join(map(str, reduced)) if reduced else "0")
    assert full == list(fubini_rs(n, r, s).coeffs)


def test_oracle():
    code, out, _ = run("oracle", "--n", "3")
    assert code == 0 and out.strip() == "0,1,6,6"
    assert run("oracle", "--n", "11")[0] == 2


def test_verify_t4_example():
    code, out, err = run(
        "verify", "--checks", "t4", "--primes", "3", "--n-max", "0", "--m-max", "0",
        "--r-max", "0", "--expect-fail", "t4",
    )
    assert code == 0
    line = json.loads(out)
    assert line["status"] == "expected-fail-reproduced"
    assert line["lhs"] == ["1", "0", "1"] and line["rhs"] == ["0", "2", "2"]
    assert "summary" in err


def test_verify_unexpected_failure_exit_code():
    code, out, _ = run(
        "verify", "--checks", "t4", "--primes", "3", "--n-max", "0", "--m-max", "0",
        "--r-max", "0", "--expect-fail", "none",
    )
    assert code == 1 and json.loads(out)["status"] == "fail"


def test_json_schema():
    _, out, _ = run("verify", "--checks", "T1,C3", "--primes", "3", "--n-max", "1", "--m-max", "2")
    for line in out.splitlines():
        obj = json.loads(line)
        assert list(obj) == sorted(obj)
        assert set(obj) == {"check_id", "params", "status", "lhs", "rhs", "modulus", "message"}
        assert all(isinstance(v, int) for v in obj["params"].values())
        assert all(isinstance(v, str) for v in obj["lhs"] + obj["rhs"])


def test_csv_header():
    _, out, _ = run("--format", "csv", "verify", "--checks", "C3", "--primes", "2")
    lines = out.splitlines()
    assert lines[0] == "check_id,params,status,modulus"
    assert len(lines) == 28


def test_rerun_byte_identical():
    args = ("verify", "--checks", "T2,T3", "--primes", "2,3,5", "--n-max", "2", "--m-max", "3")
    assert run(*args) == run(*args)
    assert run(*args)[1] == run(*args, "--jobs", "3")[1]


@pytest.mark.parametrize(
    "argv",
    [
        ["poly", "--kind", "fubini", "--n", "-1"],
        ["poly", "--kind", "rs", "--n", "2"],
        ["poly", "--kind", "fubini", "--n", "2", "--rs", "1"],
        ["poly", "--kind", "fubini", "--n", "2", "--at", "1/3", "--mod", "3"],
        ["poly", "--kind", "fubini", "--n", "2", "--mod", "4"],
        ["poly", "--kind", "fubini", "--n", "2", "--at", "0.5"],
        ["verify", "--primes", "4"],
        ["verify", "--checks", "bogus"],
        ["verify", "--jobs", "0"],
        ["series", "--check", "egf", "--order", "25", "--r", "0", "--s", "0"],
        ["roots", "--n", "0", "--r", "0", "--s", "0"],
        ["eval-series", "--f", "1", "--x", "-1/4", "--eps", "1/10"],
        ["eval-series", "--f", "1", "--x", "1", "--eps", "0"],
        ["nosuch"],
        [],
    ],
)
def test_usage_errors(argv):
    code, out, err = run(*argv)
    assert code == 2
    assert out == ""
    assert err


def test_series_and_roots():
    assert run("series", "--check", "egf", "--order", "6", "--r", "1", "--s", "2")[0] == 0
    assert run("series", "--check", "log", "--order", "6", "--r", "1", "--s", "2")[0] == 0
    code, out, _ = run("roots", "--n", "3", "--r", "1", "--s", "1")
    assert code == 0 and json.loads(out)["status"] == "pass"


def test_eval_series():
    args = ("eval-series", "--f", "0,0,0,1", "--x", "1", "--eps", "1/1048576")
    code, out, _ = run("--format", "json", *args)
    assert code == 0
    obj = json.loads(out)
    assert abs(Fraction(obj["value"]) - 13) <= Fraction(1, 2**20)
    assert obj["exact"] == "13" and obj["within_eps"] is True
    assert Fraction(run(*args)[1].strip()) == Fraction(obj["value"])


def test_poly_at_with_mod():
    # F_3(x) = x + 6x^2 + 6x^3 at x = 1/2 is 11/4, and 11 * 4^{-1} = 11 * 4 = 4 (mod 5)
    assert run("poly", "--kind", "fubini", "--n", "3", "--at", "1/2", "--mod", "5")[1].strip() == "4"


def test_jobs_from_env():
    env = dict(os.environ, FUB_JOBS="2")
    args = [sys.executable, "-m", "fubini", "verify", "--checks", "IndexRed",
            "--primes", "3", "--n-max", "1", "--m-max", "1"]
    a = subprocess.run(args, env=env, capture_output=True, text=True)
    b = subprocess.run(args, capture_output=True, text=True)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
