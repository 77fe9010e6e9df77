import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from neville_weights.stencil import make_stencil

_criteria: list[tuple[str, str]] = []


@st.composite
def rational_stencils(draw, min_m=2, max_m=5, max_den=5):
    """Exact stencils with small-denominator increasing nodes."""
    M = draw(st.integers(min_m, max_m))
    m_minus = draw(st.integers(0, M))
    start = Fraction(draw(st.integers(-10, 10)), draw(st.integers(1, max_den)))
    gaps = draw(st.lists(st.fractions(min_value=Fraction(1, max_den), max_value=5, max_denominator=max_den),
                         min_size=M, max_size=M))
    nodes = [start]
    for g in gaps:
        nodes.append(nodes[-1] + g)
    return make_stencil(m_minus, M - m_minus, nodes)


@pytest.fixture
def rng():
    return random.Random(1234)


def pytest_runtest_logreport(report):
    label = dict(report.user_properties).get("criterion")
    if label is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria.append((label, "PASS" if report.outcome == "passed" else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome in _criteria:
        terminalreporter.write_line(f"{outcome}  {label}")
