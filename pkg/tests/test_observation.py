from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import configurations, slopes
from oracles import candidates, from_points
from slopesight import (
    VERTICAL,
    Configuration,
    DuplicateSlope,
    EmptySlopeList,
    InconsistentPair,
    InvalidConfiguration,
    Observation,
    Point,
    SlantLine,
    UnboundedPotential,
    VerticalLine,
    adversarial_configuration,
    no_phantom_revealed,
    observe,
    phantoms,
    potential_points,
    slope_sequence,
)

H = F(0)


def test_observe_collinear_row(row3):
    o = observe(row3, [H, VERTICAL])
    assert o.lines_for(H) == (SlantLine(0, 0),)
    assert o.lines_for(VERTICAL) == (VerticalLine(0), VerticalLine(1), VerticalLine(2))


def test_observe_diagonal_pair(pair):
    o = observe(pair, [H, VERTICAL])
    assert o.lines_for(H) == (SlantLine(0, 0), SlantLine(0, 1))
    assert o.lines_for(VERTICAL) == (VerticalLine(0), VerticalLine(1))
    assert observe(pair, [F(1)]).lines_for(F(1)) == (SlantLine(1, 0),)


def test_observe_keeps_query_order(pair):
    o = observe(pair, [VERTICAL, F(1), H])
    assert o.slopes == (VERTICAL, F(1), H)


def test_observe_errors(pair):
    with pytest.raises(EmptySlopeList):
        observe(pair, [])
    with pytest.raises(DuplicateSlope):
        observe(pair, [F(1), F(2, 2)])


def test_configuration_invariants():
    c = Configuration.of((1, 0), (0, 5), (0, 1))
    assert c.points == (Point(0, 1), Point(0, 5), Point(1, 0))
    assert c.n == 3
    with pytest.raises(InvalidConfiguration):
        Configuration.of((0, 0), (0, 0))
    with pytest.raises(InvalidConfiguration):
        Configuration(())


def test_potential_points_examples(pair, row3):
    assert potential_points(observe(pair, [H, VERTICAL])) == (
        Point(0, 0), Point(0, 1), Point(1, 0), Point(1, 1))
    assert potential_points(observe(row3, [H, VERTICAL])) == row3.points
    assert potential_points(observe(Configuration.of((0, 0)), [H])) is None


def test_phantoms_examples(pair):
    assert phantoms(observe(pair, [H, VERTICAL]), pair) == (Point(0, 1), Point(1, 0))
    assert phantoms(observe(pair, [H, VERTICAL, F(1)]), pair) == ()
    inst = adversarial_configuration(3)
    assert Point(0, 0) in phantoms(observe(inst.configuration, inst.slopes), inst.configuration)


def test_phantoms_errors(pair):
    with pytest.raises(UnboundedPotential):
        phantoms(observe(pair, [H]), pair)
    with pytest.raises(InconsistentPair):
        phantoms(observe(pair, [H, VERTICAL]), Configuration.of((5, 5)))


def test_no_phantom_revealed_examples(pair, row3):
    assert no_phantom_revealed(row3, [H, VERTICAL])
    assert not no_phantom_revealed(pair, [H, VERTICAL])
    with pytest.raises(UnboundedPotential):
        no_phantom_revealed(pair, [H])


@given(configurations(max_n=6))
def test_first_n_plus_1_tiered_slopes_leave_no_phantom(c):
    assert no_phantom_revealed(c, slope_sequence(c.n + 1))


@given(configurations(max_n=6), st.data())
def test_any_n_plus_1_slopes_leave_no_phantom(c, data):
    s = data.draw(st.lists(slopes, min_size=c.n + 1, max_size=c.n + 1, unique=True))
    assert phantoms(observe(c, s), c) == ()


@settings(max_examples=150)
@given(configurations(max_n=5), st.lists(slopes, min_size=2, max_size=5, unique=True))
def test_potential_points_match_oracle(c, s):
    pot = potential_points(observe(c, s))
    oracle_slopes = ["v" if x is VERTICAL else x for x in s]
    assert [(p.x, p.y) for p in pot] == candidates(from_points(c.points), oracle_slopes)
    assert set(c.points) <= set(pot)


@given(configurations(max_n=5), st.lists(slopes, min_size=3, max_size=6, unique=True))
def test_adding_slopes_never_grows_potential_set(c, s):
    sizes = [len(potential_points(observe(c, s[:k]))) for k in range(2, len(s) + 1)]
    assert sizes == sorted(sizes, reverse=True)
    previous = set(potential_points(observe(c, s[:2])))
    for k in range(3, len(s) + 1):
        now = set(potential_points(observe(c, s[:k])))
        assert now <= previous
        previous = now


@given(configurations(max_n=6), slopes)
def test_line_count_bound(c, s):
    lines = observe(c, [s]).lines_for(s)
    assert 1 <= len(lines) <= c.n
    keys = [VerticalLine(p.x) if s is VERTICAL else SlantLine(s, p.y - s * p.x) for p in c.points]
    assert (len(lines) == c.n) == (len(set(keys)) == c.n)


def test_observation_rejects_wrong_slope_lines():
    with pytest.raises(InvalidConfiguration):
        Observation(((F(1), (SlantLine(2, 0),)),))
    with pytest.raises(InvalidConfiguration):
        Observation(((F(1), ()),))
