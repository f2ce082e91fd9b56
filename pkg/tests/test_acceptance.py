"""Exit criteria, one test each, with the runtime limits pinned."""
import itertools
import time
from fractions import Fraction as F

import numpy as np
import pytest

from alexandroff import (
    Comparison,
    PointMap,
    Preorder,
    StepSchedule,
    FlowCandidate,
    Variant,
    build_hyperspace,
    check_continuity,
    check_group_law,
    check_identity_at_zero,
    compare_topologies,
    discrete_space,
    embed_into_upper,
    enumerate_topologies,
    hyper_order,
    intersection_of_all_opens,
    is_continuous,
    is_embedding,
    is_order_preserving,
    is_T0,
    is_trivial,
    minimal_hyper_neighborhood,
    search_flows,
    specialization_preorder,
    swap_candidate,
    topology_from_preorder,
    validate_space,
)
from alexandroff.oracles import all_relations, count_relations, grid_group_law_violation
from alexandroff.space import _t0_by_definition, _t1_by_definition, is_discrete, is_topology

pytestmark = pytest.mark.acceptance

SEARCH_POOL = [F(-1), F(-1, 2), F(0), F(1, 2), F(1)]
GRID_POOL = [F(-2), F(-1), F(-1, 2), F(0), F(1, 2), F(1), F(2)]


@pytest.fixture
def criterion(record_property):
    def tag(num, title, limit):
        record_property("acceptance_id", num)
        record_property("acceptance_title", title)
        start = time.perf_counter()

        def done():
            elapsed = time.perf_counter() - start
            assert elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"

        return done

    return tag


def test_1_duality_round_trip(criterion):
    done = criterion(1, "duality round-trip on all 3- and 4-point topologies", 10)
    counts = {}
    for n in (3, 4):
        spaces = list(enumerate_topologies(n))
        counts[n] = len(spaces)
        for s in spaces:
            assert topology_from_preorder(specialization_preorder(s)) == s
        for rel in all_relations(n):
            p = Preorder.from_pairs(n, rel)
            assert specialization_preorder(topology_from_preorder(p)) == p
    assert counts == {3: 29, 4: 355}
    done()


def test_2_separation_axioms(criterion):
    done = criterion(2, "T0 iff antisymmetric, T1 iff discrete, poset counts 19/219", 30)
    t0_counts = {}
    for n in (1, 2, 3, 4):
        t0 = 0
        for s in enumerate_topologies(n):
            direct = _t0_by_definition(s)
            assert direct == specialization_preorder(s).is_antisymmetric()
            assert _t1_by_definition(s) == is_discrete(s)
            t0 += direct
        t0_counts[n] = t0
    assert t0_counts[3] == 19 == count_relations(3)[1]
    assert t0_counts[4] == 219 == count_relations(4)[1]
    done()


def test_3_continuity_is_order_preservation(criterion):
    done = criterion(3, "preimage-openness iff order-preservation, all maps between spaces of <= 3 points", 60)
    spaces = [s for n in (1, 2, 3) for s in enumerate_topologies(n)]
    checked = 0
    for src, dst in itertools.product(spaces, repeat=2):
        for img in itertools.product(range(dst.n), repeat=src.n):
            f = PointMap(src.n, dst.n, img)
            by_preimage = all(f.preimage(v) in src.opens for v in dst.opens)
            assert by_preimage == is_order_preserving(src, dst, f) == is_continuous(src, dst, f)
            checked += 1
    assert checked > 20000
    done()


def test_4_hyperspace_suite(criterion):
    done = criterion(4, "strong lower / lower / upper hyperspace structure, bases of 1..4 points", 60)
    for n in (1, 2, 3, 4):
        labels = tuple(range(1, n + 1))
        base = discrete_space(labels)
        sl = build_hyperspace(base, Variant.STRONG_LOWER)
        lower = build_hyperspace(base, Variant.LOWER)
        upper = build_hyperspace(base, Variant.UPPER)
        assert is_topology(sl.space.n, sl.space.opens) and is_T0(sl.space)
        points = [sl.hyperpoint(i) for i in range(sl.space.n)]
        for c in points:
            assert minimal_hyper_neighborhood(sl, c) == {d for d in points if c <= d}
        order = hyper_order(sl)
        for i, j in itertools.product(range(len(points)), repeat=2):
            assert order.le(i, j) == (points[j] <= points[i])
        assert topology_from_preorder(order.opposite(), upper.space.elements).opens == upper.space.opens
        assert intersection_of_all_opens(lower) == {frozenset(labels)}
        assert compare_topologies(sl.space, lower.space) is Comparison.EQUAL
    done()


def test_5_embedding(criterion):
    done = criterion(5, "x -> U_x embeds every T0 space of <= 4 points into the upper hyperspace", 60)
    embedded = 0
    for n in (1, 2, 3, 4):
        for s in enumerate_topologies(n):
            if not is_T0(s):
                continue
            f, h = embed_into_upper(s)
            assert h.variant is Variant.UPPER
            assert len(set(f.image)) == n
            assert is_embedding(s, h.space, f)
            embedded += 1
    assert embedded == 1 + 3 + 19 + 219
    done()


def test_6_only_trivial_flows_on_t0_spaces(criterion):
    done = criterion(6, "exhaustive flow search on T0 spaces of <= 3 points finds only the trivial flow", 300)
    for n in (1, 2, 3):
        for s in enumerate_topologies(n):
            if not is_T0(s):
                continue
            found = search_flows(s, SEARCH_POOL, 2, homeo_only=True)
            assert len(found) == 1 and is_trivial(found[0])
    done()


def test_7_swap_construction_discrepancy(criterion, capsys, tmp_path):
    import json

    from alexandroff.cli import main

    done = criterion(7, "swap construction passes identity and continuity, fails group law at s=t=1", 1)
    pair = validate_space(["x", "y"], [[], ["x", "y"]])
    c = swap_candidate(pair, "x", "y")
    assert check_identity_at_zero(c).passed
    assert check_continuity(c).passed
    g = check_group_law(c)
    assert not g.passed and (g.witness["s"], g.witness["t"]) == (1, 1)
    assert c.map_at(2) != tuple(c.map_at(1)[v] for v in c.map_at(1))
    flow = {
        "space": {"elements": ["x", "y"], "opens": [[], ["x", "y"]]},
        "maps": {"id": {"x": "x", "y": "y"}, "swap": {"x": "y", "y": "x"}},
        "breakpoints": ["0"],
        "pieces": ["swap", "id", "swap"],
    }
    path = tmp_path / "swap.json"
    path.write_text(json.dumps(flow))
    assert main(["flow", "verify", str(path)]) == 1
    report = json.loads(capsys.readouterr().out)
    assert report["result"]["swap_construction_discrepancy"] is True
    done()


def test_8_lower_hyperspace_admits_only_trivial_flow(criterion):
    done = criterion(8, "flow search on the 7-point lower hyperspace of a 3-point discrete space", 300)
    h = build_hyperspace(discrete_space((1, 2, 3)), Variant.LOWER)
    assert h.space.n == 7
    found = search_flows(h.space, SEARCH_POOL, 2, homeo_only=True)
    assert len(found) == 1 and is_trivial(found[0])
    done()


def _random_candidate(rng, spaces):
    space = spaces[rng.integers(len(spaces))]
    n = space.n
    k = int(rng.integers(3))
    bps = sorted(rng.choice(len(GRID_POOL), size=k, replace=False).tolist())
    bps = tuple(GRID_POOL[i] for i in bps)
    ident = tuple(range(n))
    perm = tuple(rng.permutation(n).tolist())
    palette = [ident, perm, tuple(rng.integers(n, size=n).tolist())]
    weights = [0.6, 0.25, 0.15] if rng.random() < 0.5 else [1 / 3] * 3
    picks = rng.choice(3, size=2 * k + 1, p=weights)
    maps = {f"m{i}": PointMap(n, n, img) for i, img in enumerate(palette)}
    return FlowCandidate(space, maps, StepSchedule(bps, tuple(f"m{i}" for i in picks)))


def test_9_group_law_matches_grid_oracle(criterion):
    done = criterion(9, "symbolic group law agrees with the dense grid oracle on 10^4 random candidates", 300)
    rng = np.random.default_rng(20240229)
    spaces = [s for n in (1, 2, 3) for s in enumerate_topologies(n)]
    passes = confirmed = 0
    for _ in range(10_000):
        c = _random_candidate(rng, spaces)
        r = check_group_law(c)
        hit = grid_group_law_violation(c.map_at)
        if r.passed:
            assert hit is None
            passes += 1
        else:
            s, t = r.witness["s"], r.witness["t"]
            assert c.map_at(s + t) != tuple(c.map_at(s)[v] for v in c.map_at(t))
            if all((4 * v).denominator == 1 and abs(4 * v) <= 16 for v in (s, t)):
                assert hit is not None
                confirmed += 1
    assert passes > 0 and confirmed > 0
    done()
