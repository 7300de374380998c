from fractions import Fraction

import pytest
from hypothesis import strategies as st

from stieltjes_string import DiscreteMeasure

F = Fraction

small_rationals = st.fractions(min_value=-6, max_value=6, max_denominator=7)
positive_rationals = st.fractions(min_value=F(1, 7), max_value=6, max_denominator=7)
nonneg_rationals = st.one_of(st.just(F(0)), positive_rationals)


@st.composite
def measures(draw, max_points=4, support=small_rationals):
    lambdas = draw(st.lists(support, max_size=max_points, unique=True))
    masses = draw(st.lists(positive_rationals, min_size=len(lambdas), max_size=len(lambdas)))
    return DiscreteMeasure(tuple(zip(lambdas, masses)), draw(nonneg_rationals), draw(small_rationals))


@pytest.fixture
def reference_measures():
    """The three hand-checked cases: delta_0, delta_1, delta_1 + delta_-1."""
    return {
        "delta0": DiscreteMeasure(((0, 1),)),
        "delta1": DiscreteMeasure(((1, 1),)),
        "pair": DiscreteMeasure(((1, 1), (-1, 1))),
    }


_acceptance_lines = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        _acceptance_lines.append(f"{'PASS' if report.passed else 'FAIL'}  {name}")


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
