"""Named structural checks, run by the command-line reports.

Each check returns a `Check`; a check that raises `ConsistencyError` counts as a
failure carrying the error message.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from .enumeration import enumerate_topologies
from .errors import ConsistencyError
from .flows import check_continuity, check_group_law, check_identity_at_zero, is_trivial, search_flows, swap_candidate
from .hyperspace import (
    Comparison,
    Hyperspace,
    Variant,
    build_hyperspace,
    compare_topologies,
    discrete_space,
    embed_into_upper,
    hyper_order,
    intersection_of_all_opens,
    minimal_hyper_neighborhood,
    upper_direct_opens,
)
from .space import (
    FiniteSpace,
    PointMap,
    _t0_by_definition,
    _t1_by_definition,
    is_continuous,
    is_discrete,
    is_T0,
    specialization_preorder,
    topology_from_preorder,
)

DIVISIBILITY_NOTE = (
    "every flow on a finite space is trivial: t -> phi_t is a homomorphism from the "
    "divisible group (R,+) into a finite permutation group, whose only divisible "
    "subgroup is trivial; so non-T0 finite spaces admit no non-trivial flow either"
)

SWAP_NOTE = (
    "the swap construction (exchange x,y for t != 0, identity at t = 0) is not a flow: "
    "phi_2 is the swap but phi_1 o phi_1 is the identity"
)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


def run_check(name: str, fn: Callable[[], object]) -> Check:
    try:
        result = fn()
    except ConsistencyError as exc:
        return Check(name, False, str(exc))
    if isinstance(result, tuple):
        ok, detail = result
        return Check(name, bool(ok), detail)
    return Check(name, bool(result))


# -- hyperspaces ----------------------------------------------------------------


def hyperspace_checks(base: FiniteSpace) -> list[Check]:
    lower = build_hyperspace(base, Variant.LOWER)
    sl = build_hyperspace(base, Variant.STRONG_LOWER)
    upper = build_hyperspace(base, Variant.UPPER)

    def sl_valid():
        from .space import is_topology

        return is_topology(sl.space.n, sl.space.opens) and is_T0(sl.space)

    def min_nbhds(h: Hyperspace):
        for i in range(h.space.n):
            minimal_hyper_neighborhood(h, h.points[i])
        return True

    def upper_opposite():
        opp = topology_from_preorder(hyper_order(sl).opposite(), upper.space.elements)
        return compare_topologies(opp, upper.space) is Comparison.EQUAL

    def lower_meet_of_singletons():
        for i, c in enumerate(lower.points):
            meet = lower.space.full
            for k in range(base.n):
                if c >> k & 1:
                    meet &= lower.carrier_mask(lambda d, k=k: d >> k & 1)
            if lower.space.minimal_opens[i] != meet:
                return False, f"at {lower.space.elements[i]}"
        return True

    return [
        run_check("strong_lower_is_alexandroff_t0", sl_valid),
        run_check("strong_lower_min_neighborhood_is_supersets", lambda: min_nbhds(sl)),
        run_check("strong_lower_order_is_reverse_inclusion", lambda: hyper_order(sl) is not None),
        run_check("upper_order_is_inclusion", lambda: hyper_order(upper) is not None),
        run_check("upper_is_opposite_order_topology", upper_opposite),
        run_check("upper_matches_direct_subbase", lambda: upper_direct_opens(base) == upper.space.opens),
        run_check("lower_min_neighborhood_is_meet_of_singleton_L", lower_meet_of_singletons),
        run_check(
            "lower_nonempty_opens_meet_in_full_set",
            lambda: intersection_of_all_opens(lower) == {frozenset(base.elements)},
        ),
        run_check(
            "strong_lower_equals_lower",
            lambda: compare_topologies(sl.space, lower.space) is Comparison.EQUAL,
        ),
    ]


# -- the whole suite ------------------------------------------------------------


def _spaces(max_n):
    for n in range(1, max_n + 1):
        yield from enumerate_topologies(n)


def suite(max_n: int = 3, flow_max_n: int = 2) -> list[Check]:
    """Every structural claim, exhaustively over small spaces."""
    checks = []

    def round_trip():
        for s in _spaces(max_n):
            p = specialization_preorder(s)
            back = topology_from_preorder(p)
            if back.opens != s.opens or specialization_preorder(back) != p:
                return False, f"fails on {s!r}"
        return True

    def t0_antisymmetric():
        return all(_t0_by_definition(s) == specialization_preorder(s).is_antisymmetric() for s in _spaces(max_n))

    def t1_discrete():
        return all(_t1_by_definition(s) == is_discrete(s) for s in _spaces(max_n))

    def continuity_is_monotonicity():
        small = list(_spaces(min(max_n, 2)))
        for src, dst in itertools.product(small, repeat=2):
            for img in itertools.product(range(dst.n), repeat=src.n):
                is_continuous(src, dst, PointMap(src.n, dst.n, img))
        return True

    def embeddings():
        for s in _spaces(max_n):
            if is_T0(s):
                embed_into_upper(s)
        return True

    def t0_flows_trivial():
        for s in _spaces(flow_max_n):
            if is_T0(s):
                found = search_flows(s, ["-1", "-1/2", "0", "1/2", "1"], 2, homeo_only=True)
                if not all(is_trivial(c) for c in found):
                    return False, f"non-trivial flow on {s!r}"
        return True

    def swap_fails_group_law():
        pair = FiniteSpace(("x", "y"), frozenset({0, 3}))
        c = swap_candidate(pair, "x", "y")
        g = check_group_law(c)
        ok = check_identity_at_zero(c).passed and check_continuity(c).passed and not g.passed
        return ok, SWAP_NOTE

    checks.append(run_check("preorder_topology_round_trip", round_trip))
    checks.append(run_check("t0_iff_antisymmetric", t0_antisymmetric))
    checks.append(run_check("t1_iff_discrete", t1_discrete))
    checks.append(run_check("continuous_iff_order_preserving", continuity_is_monotonicity))
    for n in range(1, max_n + 1):
        for c in hyperspace_checks(discrete_space(tuple(range(1, n + 1)))):
            checks.append(Check(f"{c.name}[n={n}]", c.passed, c.detail))
    checks.append(run_check("t0_embeds_into_upper_hyperspace", embeddings))
    checks.append(run_check("t0_spaces_admit_only_trivial_flows", t0_flows_trivial))
    checks.append(run_check("swap_construction_violates_group_law", swap_fails_group_law))
    return checks


__all__ = ["Check", "hyperspace_checks", "suite", "run_check", "DIVISIBILITY_NOTE", "SWAP_NOTE"]
