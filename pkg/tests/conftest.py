import sys

from hypothesis import settings, strategies as st

from fubini.poly import IntPoly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 101, 2**31 - 1]

coeff_lists = st.lists(st.integers(-50, 50), max_size=8)
int_polys = coeff_lists.map(IntPoly)
primes = st.sampled_from(SMALL_PRIMES)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None:
        return
    terminalreporter.section("acceptance criteria")
    for number in mod.CRITERIA:
        line = mod.RESULTS.get(number, f"ACCEPTANCE {number} FAIL not run or errored")
        terminalreporter.write_line(line)
