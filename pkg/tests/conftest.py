import sys
from functools import lru_cache
from pathlib import Path

import pytest

from expansive.cli import read_matrix
from expansive.enumeration import enumerate_points
from expansive.points import exp_point

ROOT = Path(__file__).resolve().parent.parent
MATRICES = ROOT / "matrices"


def matrix_cases(name="desk.txt"):
    return read_matrix(MATRICES / name)


def case_id(case):
    return f"{case.ring}|{case.poly}".replace(" ", "")


@lru_cache(maxsize=None)
def points_of(p, r):
    return tuple(enumerate_points(p, r).ideals)


@lru_cache(maxsize=None)
def exp_of(p, r):
    return exp_point(p, r)


DESK = matrix_cases()


@pytest.fixture(params=DESK, ids=case_id)
def desk_case(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.summary_line(k))
