import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cmstruct.core import MetricStructure, Relation  # noqa: E402


def structure(metric, relations=None, names=None):
    n = len(metric)
    return MetricStructure(names or [f"p{i}" for i in range(n)], metric, relations or {})


@pytest.fixture
def two_point():
    return structure([[0, 1], [1, 0]], {"R": Relation(1, frozenset({(0,)}))})


@pytest.fixture
def three_point():
    # d(0,1)=1, d(0,2)=2, d(1,2)=3
    return structure([[0, 1, 2], [1, 0, 3], [2, 3, 0]])


@pytest.fixture
def half():
    return Fraction(1, 2)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_report():
    def record(line: str) -> None:
        ACCEPTANCE_LINES.append(line)
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
