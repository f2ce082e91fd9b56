import itertools

import pytest
from hypothesis import given, strategies as st

from alexandroff import (
    DuplicateLabel,
    MalformedInput,
    MissingEmptyOrFull,
    NotAPreorder,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
    PointMap,
    Preorder,
    enumerate_homeomorphisms,
    enumerate_topologies,
    is_continuous,
    is_discrete,
    is_homeomorphism,
    is_order_preserving,
    is_T0,
    is_T1,
    minimal_open_neighborhood,
    specialization_preorder,
    topology_from_preorder,
    validate_space,
)
from alexandroff.oracles import brute_force_homeomorphisms
from alexandroff.space import generate_topology, is_topology, subspace


# -- validate_space --


def test_sierpinski_is_valid(sierpinski):
    assert sierpinski.opens == {0b00, 0b01, 0b11}


def test_missing_full_set_reports_union_first():
    with pytest.raises(NotClosedUnderUnion) as err:
        validate_space(["a", "b"], [[], ["a"], ["b"]])
    assert err.value.witness == (["a"], ["b"])


def test_indiscrete_pair_is_valid(indiscrete_pair):
    assert indiscrete_pair.opens == {0, 3}


def test_intersection_witness():
    with pytest.raises(NotClosedUnderIntersection) as err:
        validate_space([1, 2, 3], [[], [1, 2], [2, 3], [1, 2, 3]])
    assert err.value.witness == ([1, 2], [2, 3])


def test_missing_empty_set():
    with pytest.raises(MissingEmptyOrFull):
        validate_space(["a", "b"], [["a"], ["a", "b"]])


def test_duplicate_label():
    with pytest.raises(DuplicateLabel):
        validate_space(["a", "a"], [[], ["a"]])


@pytest.mark.parametrize(
    "elements, opens",
    [([], [[]]), (["a"], [[], ["a"], ["z"]])],
)
def test_malformed_input(elements, opens):
    with pytest.raises(MalformedInput):
        validate_space(elements, opens)


# -- duality --


def test_sierpinski_order(sierpinski):
    p = specialization_preorder(sierpinski)
    assert p.le(0, 1) and not p.le(1, 0)


def test_discrete_order_is_diagonal(discrete_pair):
    assert specialization_preorder(discrete_pair).pairs() == [(0, 0), (1, 1)]


def test_indiscrete_order_is_symmetric(indiscrete_pair):
    p = specialization_preorder(indiscrete_pair)
    assert p.le(0, 1) and p.le(1, 0)
    assert not p.is_antisymmetric()


def test_chain_topology():
    p = Preorder.from_pairs(3, [(0, 1), (1, 2)])
    assert sorted(topology_from_preorder(p).opens) == [0b000, 0b001, 0b011, 0b111]


def test_antichain_topology_is_discrete():
    assert topology_from_preorder(Preorder.from_pairs(2, [])).opens == {0, 1, 2, 3}


def test_indiscrete_preorder_topology():
    assert topology_from_preorder(Preorder.from_pairs(2, [(0, 1), (1, 0)])).opens == {0, 3}


def test_preorder_rejects_non_transitive():
    with pytest.raises(NotAPreorder):
        Preorder(((True, True, False), (False, True, True), (False, False, True)))


def test_preorder_rejects_non_reflexive():
    with pytest.raises(NotAPreorder):
        Preorder(((True, False), (False, False)))


@st.composite
def preorders(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    pairs = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=n * n))
    return Preorder.from_pairs(n, pairs)


@given(preorders())
def test_round_trip_from_preorder(p):
    t = topology_from_preorder(p)
    assert is_topology(p.size, t.opens)
    assert specialization_preorder(t) == p


@given(preorders())
def test_opens_are_exactly_down_sets(p):
    t = topology_from_preorder(p)
    for mask in range(1 << p.size):
        down = all(
            not (mask >> x & 1) or all(mask >> y & 1 for y in range(p.size) if p.le(y, x))
            for x in range(p.size)
        )
        assert (mask in t.opens) == down


# -- minimal neighborhoods --


def test_minimal_neighborhoods(sierpinski, discrete3):
    assert minimal_open_neighborhood(sierpinski, 1) == 0b11
    assert minimal_open_neighborhood(sierpinski, 0) == 0b01
    assert [minimal_open_neighborhood(discrete3, x) for x in range(3)] == [1, 2, 4]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_minimal_neighborhood_is_least_open(n):
    for s in enumerate_topologies(n):
        p = specialization_preorder(s)
        for x in range(n):
            u = minimal_open_neighborhood(s, x)
            assert u in s.opens and u >> x & 1
            assert all(u & ~o == 0 for o in s.opens if o >> x & 1)
            assert u == sum(1 << y for y in range(n) if p.le(y, x))


# -- separation --


def test_separation_examples(sierpinski, indiscrete_pair, discrete_pair):
    assert (is_T0(sierpinski), is_T1(sierpinski), is_discrete(sierpinski)) == (True, False, False)
    assert not is_T0(indiscrete_pair)
    assert (is_T0(discrete_pair), is_T1(discrete_pair), is_discrete(discrete_pair)) == (True, True, True)


# -- continuity --


def test_swap_on_sierpinski_is_not_continuous(sierpinski):
    swap = PointMap(2, 2, (1, 0))
    assert not is_continuous(sierpinski, sierpinski, swap)
    assert swap.preimage(0b01) == 0b10


def test_identity_and_constants_are_continuous():
    for s in enumerate_topologies(3):
        assert is_continuous(s, s, PointMap.identity(3))
        for v in range(3):
            assert is_continuous(s, s, PointMap(3, 3, (v, v, v)))


def test_continuity_rejects_mismatched_map(sierpinski):
    with pytest.raises(MalformedInput):
        is_continuous(sierpinski, sierpinski, PointMap(3, 2, (0, 0, 0)))


def test_point_map_basics():
    f = PointMap(3, 3, (1, 2, 0))
    assert f.compose(f.inverse()).is_identity()
    assert f.compose(f).image == (2, 0, 1)
    with pytest.raises(ValueError):
        PointMap(2, 2, (0, 0)).inverse()
    with pytest.raises(MalformedInput):
        PointMap(2, 2, (0, 5))


# -- homeomorphisms --


def test_homeomorphism_examples(discrete3, sierpinski, indiscrete_pair):
    assert len(enumerate_homeomorphisms(discrete3)) == 6
    assert [f.image for f in enumerate_homeomorphisms(sierpinski)] == [(0, 1)]
    assert [f.image for f in enumerate_homeomorphisms(indiscrete_pair)] == [(0, 1), (1, 0)]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_homeomorphisms_match_brute_force(n):
    for s in enumerate_topologies(n):
        fast = enumerate_homeomorphisms(s)
        assert [f.image for f in fast] == brute_force_homeomorphisms(s)
        assert all(is_homeomorphism(s, s, f) for f in fast)


@pytest.mark.parametrize("n", [2, 3])
def test_homeomorphisms_form_a_group(n):
    for s in enumerate_topologies(n):
        group = {f.image: f for f in enumerate_homeomorphisms(s)}
        assert tuple(range(n)) in group
        for f, g in itertools.product(group.values(), repeat=2):
            assert f.compose(g).image in group
        for f in group.values():
            assert f.inverse().image in group


# -- helpers --


def test_generate_topology_from_subbase():
    assert generate_topology(3, [0b011, 0b110]) == {0, 0b010, 0b011, 0b110, 0b111}


def test_subspace_of_chain(chain3):
    sub = subspace(chain3, 0b101)
    assert sub.elements == (0, 2)
    assert sub.opens == {0, 0b01, 0b11}


def test_order_preserving_matches_continuity_small():
    spaces = list(enumerate_topologies(2))
    for src, dst in itertools.product(spaces, repeat=2):
        for img in itertools.product(range(2), repeat=2):
            f = PointMap(2, 2, img)
            assert is_continuous(src, dst, f) == is_order_preserving(src, dst, f)
