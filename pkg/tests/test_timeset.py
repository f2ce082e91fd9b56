from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from alexandroff.timeset import POS_INF, NEG_INF, TimeSet, interval, point, simplest_in

# endpoints live on the integers in [-4, 4]; probes on a finer grid see every gap
PROBES = [F(k, 4) for k in range(-24, 25)]
EPS = F(1, 8)


@st.composite
def intervals(draw):
    if draw(st.booleans()):
        return point(draw(st.integers(-4, 4)))
    lo = draw(st.one_of(st.just(NEG_INF), st.integers(-4, 4)))
    hi = draw(st.one_of(st.just(POS_INF), st.integers(-4, 4)))
    return interval(lo, hi, draw(st.booleans()), draw(st.booleans()))


time_sets = st.lists(intervals(), max_size=4).map(TimeSet.of)


@given(time_sets, time_sets)
def test_union_intersection_pointwise(a, b):
    for t in PROBES:
        assert (a | b).contains(t) == (a.contains(t) or b.contains(t))
        assert (a & b).contains(t) == (a.contains(t) and b.contains(t))
        assert a.complement().contains(t) == (not a.contains(t))
        assert (a - b).contains(t) == (a.contains(t) and not b.contains(t))


@given(time_sets)
def test_interior_pointwise(a):
    # with integer endpoints, t is interior iff a small window around it is inside
    inner = a.interior()
    for t in PROBES:
        window = all(a.contains(t + d) for d in (-EPS, 0, EPS))
        assert inner.contains(t) == window


@given(time_sets)
def test_canonical_form(a):
    comps = a.components
    for x, y in zip(comps, comps[1:]):
        assert x.hi <= y.lo
        assert not (x.hi == y.lo and (x.hi_closed or y.lo_closed))
    assert TimeSet.of(reversed(comps)) == a
    assert (a | a) == a


@given(time_sets, time_sets)
def test_subset(a, b):
    assert (a & b).issubset(a)
    assert a.issubset(a | b)


def test_merging_examples():
    pieces = [interval(NEG_INF, 0), point(0), interval(0, POS_INF)]
    assert TimeSet.of(pieces) == TimeSet.real_line()
    assert TimeSet.of([interval(0, 1), interval(1, 2)]).components == (interval(0, 1), interval(1, 2))
    assert TimeSet.of([interval(0, 1), interval(1, 2, True)]).components == (interval(0, 2),)


def test_interior_of_point_is_empty():
    assert TimeSet.of([point(0)]).interior().is_empty()
    assert TimeSet.of([interval(0, 1, True, True)]).interior() == TimeSet.of([interval(0, 1)])


def test_empty_interval_is_none():
    assert interval(1, 1) is None
    assert interval(2, 1, True, True) is None
    assert interval(NEG_INF, NEG_INF) is None


@pytest.mark.parametrize(
    "iv, expected",
    [
        (interval(NEG_INF, POS_INF), 0),
        (interval(0, POS_INF), 1),
        (interval(NEG_INF, 0), -1),
        (interval(0, 1), F(1, 2)),
        (interval(F(1, 3), F(1, 2)), F(2, 5)),
        (interval(1, 2, True), 1),
        (interval(1, 2), F(3, 2)),
        (point(F(-7, 3)), F(-7, 3)),
    ],
)
def test_simplest_in(iv, expected):
    assert simplest_in(iv) == expected


@given(intervals().filter(lambda iv: iv is not None))
def test_simplest_in_is_member(iv):
    assert iv.contains(simplest_in(iv))


def test_sumset():
    assert interval(0, POS_INF) + interval(0, POS_INF) == interval(0, POS_INF)
    assert point(5) + interval(NEG_INF, 5) == interval(NEG_INF, 10)
    assert interval(0, 1, True, True) + interval(2, 3) == interval(2, 4)
    assert -interval(0, 1, True, False) == interval(-1, 0, False, True)


def test_floats_refused():
    with pytest.raises(TypeError):
        point(0.5)
    with pytest.raises(TypeError):
        interval(0.5, 1)
