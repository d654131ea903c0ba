from fractions import Fraction

import pytest
from hypothesis import strategies as st

from solvlie import Matrix, Metric, Subspace, parse_salamon
from solvlie.metric import induced_metric

MAIN_SALAMON = "(e42+e51-e54, -e41+e52, e12-e51+2*e53-7/12*e54, 0, 0)"
MAIN_GRAM = {(0, 0): Fraction(497, 576), (1, 1): Fraction(49, 192), (2, 2): Fraction(2),
              (0, 2): Fraction(-7, 6), (3, 3): Fraction(-245, 6144), (4, 4): Fraction(-1225, 6144)}
HEIS_GRAM = [[Fraction(497, 576), 0, Fraction(-7, 6)], [0, Fraction(49, 192), 0], [Fraction(-7, 6), 0, 2]]


def gram_from(entries, n):
    rows = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), v in entries.items():
        rows[i][j] = rows[j][i] = v
    return Matrix(rows, n)


@pytest.fixture(scope="module")
def main_alg():
    return parse_salamon(MAIN_SALAMON)


@pytest.fixture(scope="module")
def main_metric(main_alg):
    return Metric(main_alg, gram_from(MAIN_GRAM, 5))


@pytest.fixture(scope="module")
def nil(main_alg):
    return Subspace.coordinate(main_alg, [0, 1, 2])


@pytest.fixture(scope="module")
def heis():
    return parse_salamon("(0,0,e12)")


@pytest.fixture(scope="module")
def heis_restricted(main_metric, nil):
    return induced_metric(main_metric, nil)


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
small_ints = st.integers(min_value=-3, max_value=3).map(Fraction)


def matrices(n, elements=small_ints):
    return st.lists(st.lists(elements, min_size=n, max_size=n), min_size=n, max_size=n).map(lambda r: Matrix(r, n))


def invertible(n, elements=small_ints):
    return matrices(n, elements).filter(lambda m: m.det() != 0)


def vectors(n, elements=rationals):
    return st.lists(elements, min_size=n, max_size=n).map(tuple)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n][1])
