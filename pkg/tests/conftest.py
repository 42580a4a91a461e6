import os
import sys
from fractions import Fraction

import pytest
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from slopesight import VERTICAL, Configuration, Point  # noqa: E402

small_rationals = st.builds(
    Fraction, st.integers(-16, 16), st.integers(1, 16)
)
points = st.builds(Point, small_rationals, small_rationals)
slopes = st.one_of(st.just(VERTICAL), small_rationals)


@st.composite
def configurations(draw, min_n=1, max_n=5):
    pts = draw(st.lists(points, min_size=min_n, max_size=max_n, unique=True))
    return Configuration(tuple(pts))


@pytest.fixture
def pair():
    """The 2-point diagonal used throughout the two-point discussion."""
    return Configuration.of((0, 0), (1, 1))


@pytest.fixture
def row3():
    return Configuration.of((0, 0), (1, 0), (2, 0))


def pytest_terminal_summary(terminalreporter):
    # one line per criterion; a criterion fails if any of its tests failed
    results = {}
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            props = dict(getattr(rep, "user_properties", ()))
            if rep.when == "call" and "criterion" in props:
                num = props["criterion"]
                ok, title = results.get(num, (True, props.get("title", "")))
                results[num] = (ok and outcome == "passed", title)
    if results:
        terminalreporter.section("acceptance criteria")
        for num in sorted(results):
            ok, title = results[num]
            terminalreporter.write_line(f"AC{num} {'PASS' if ok else 'FAIL'}  {title}")
