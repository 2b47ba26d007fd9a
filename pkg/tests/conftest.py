from fractions import Fraction

import pytest

from diffeolin import DiffSpace, Matrix

A_PAPER = Matrix([[2, 1, -1], [1, 2, -2], [-1, -2, 2]])
A_CANON = Matrix([[1, 0, 0], [0, 1, -1], [0, -1, 1]])


def F(p, q=1):
    return Fraction(p, q)


@pytest.fixture
def e3():
    return DiffSpace.of(3, ("abs", (0, 1, 1)))


@pytest.fixture
def e0():
    return DiffSpace.standard(2)


@pytest.fixture
def e2():
    return DiffSpace.of(3, ("abs", (1, 0, 0)), ("cbrt", (0, 1, 0)))


@pytest.fixture
def e4():
    return DiffSpace.of(2, ("abs", (1, 0)), ("abs", (0, 1)))


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(line)
