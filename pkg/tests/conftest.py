from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from griess_s3.ansatz import build_algebra

LAM_A2 = Fraction(13, 256)
LAM_B = Fraction(1, 64)

# filled in by test_acceptance.py, printed at the end of the run
ACCEPTANCE_RESULTS: list[tuple[int, bool, str]] = []


def rationals(max_num: int = 50, max_den: int = 20):
    return st.builds(Fraction, st.integers(-max_num, max_num), st.integers(1, max_den))


def element_coords(dim: int, **kw):
    return st.lists(rationals(**kw), min_size=dim, max_size=dim)


@pytest.fixture(scope="session")
def alg_a2():
    return build_algebra(LAM_A2)


@pytest.fixture(scope="session")
def alg_b():
    return build_algebra(LAM_B)


@pytest.fixture(scope="session", params=[LAM_B, LAM_A2], ids=["lam=1/64", "lam=13/256"])
def built(request):
    return request.param, build_algebra(request.param)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n, ok, desc in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {desc}")
