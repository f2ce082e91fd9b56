"""Hyperspaces of nonempty subsets of a finite discrete space.

A hyperpoint is a nonempty subset of the base; internally it is a bitmask over the
base elements, externally a frozenset of base labels.  The carrier of every
variant is the same (all nonempty subsets, all of which are finite here), listed
by size and then by bitmask.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Sequence

from .errors import BudgetExceeded, CarrierMismatch, ConsistencyError, NotDiscrete, NotT0
from .space import (
    FiniteSpace,
    PointMap,
    Preorder,
    generate_topology,
    is_discrete,
    is_embedding,
    is_T0,
    mask_from,
    members,
    specialization_preorder,
    subspace,
    topology_from_preorder,
)

MAX_BASE_SIZE = 4


class Variant(str, enum.Enum):
    LOWER = "lower"
    STRONG_LOWER = "strong_lower"
    UPPER = "upper"
    FINITE_LOWER = "finite_lower"
    FINITE_UPPER = "finite_upper"

    @property
    def lower_like(self) -> bool:
        return self in (Variant.LOWER, Variant.STRONG_LOWER, Variant.FINITE_LOWER)


class Comparison(str, enum.Enum):
    EQUAL = "equal"
    STRICTLY_FINER = "strictly_finer"
    STRICTLY_COARSER = "strictly_coarser"
    INCOMPARABLE = "incomparable"


def subset_label(labels: Iterable) -> str:
    return "{" + ",".join(str(x) for x in labels) + "}"


def discrete_space(labels: Sequence[Hashable]) -> FiniteSpace:
    n = len(labels)
    return FiniteSpace(tuple(labels), frozenset(range(1 << n)))


def carrier(n: int) -> tuple:
    return tuple(sorted(range(1, 1 << n), key=lambda m: (m.bit_count(), m)))


@dataclass(frozen=True)
class Hyperspace:
    base: FiniteSpace
    variant: Variant
    points: tuple  # bitmasks over the base, aligned with space.elements
    space: FiniteSpace

    @cached_property
    def _position(self) -> dict:
        return {m: i for i, m in enumerate(self.points)}

    def position(self, point) -> int:
        """Carrier index of a hyperpoint given as a bitmask or as base labels."""
        m = point if isinstance(point, int) else self.base.mask_of(point)
        return self._position[m]

    def hyperpoint(self, i: int) -> frozenset:
        return frozenset(self.base.labels_of(self.points[i]))

    def hyperpoints_of(self, mask: int) -> frozenset:
        """Carrier subset (bitmask over carrier indices) as a set of hyperpoints."""
        return frozenset(self.hyperpoint(i) for i in members(mask))

    def carrier_mask(self, predicate) -> int:
        return mask_from(i for i, m in enumerate(self.points) if predicate(m))


def _lower_set(points: Sequence[int], u: int) -> int:
    return mask_from(i for i, m in enumerate(points) if m & u)


def subbasic_L(base: FiniteSpace, u: Iterable[Hashable]) -> set:
    """All nonempty F with F meeting u."""
    um = base.mask_of(u)
    return {frozenset(base.labels_of(m)) for m in carrier(base.n) if m & um}


def _lower_opens(base: FiniteSpace, points) -> frozenset:
    # finite intersections of L_U over open U, then unions
    return generate_topology(len(points), (_lower_set(points, u) for u in sorted(base.opens)))


def _strong_lower_opens(base: FiniteSpace, points) -> frozenset:
    # basic opens: intersections of at most |X| sets L_U, which on a finite base
    # already covers every intersection of an arbitrary subfamily
    subbasic = sorted({_lower_set(points, u) for u in base.opens})
    full = (1 << len(points)) - 1
    basics = set()
    for k in range(base.n + 1):
        for family in itertools.combinations(subbasic, k):
            b = full
            for s in family:
                b &= s
            basics.add(b)
    opens = {0}
    for b in sorted(basics):
        opens |= {o | b for o in opens}
    return frozenset(opens)


def upper_direct_opens(base: FiniteSpace, points=None) -> frozenset:
    """Upper semifinite topology from its subbase {F : F subset of U} over open U."""
    if points is None:
        points = carrier(base.n)
    return generate_topology(
        len(points),
        (mask_from(i for i, m in enumerate(points) if m & ~u == 0) for u in sorted(base.opens)),
    )


def build_hyperspace(base: FiniteSpace, variant: Variant | str) -> Hyperspace:
    variant = Variant(variant)
    if not is_discrete(base):
        raise NotDiscrete("hyperspaces are built over a discrete base")
    if base.n > MAX_BASE_SIZE:
        raise BudgetExceeded(f"hyperspace base is capped at {MAX_BASE_SIZE} points, got {base.n}")
    points = carrier(base.n)
    labels = tuple(subset_label(base.labels_of(m)) for m in points)

    if variant is Variant.LOWER:
        opens = _lower_opens(base, points)
    elif variant is Variant.STRONG_LOWER:
        opens = _strong_lower_opens(base, points)
    elif variant is Variant.UPPER:
        sl = FiniteSpace(labels, _strong_lower_opens(base, points))
        opens = topology_from_preorder(specialization_preorder(sl).opposite()).opens
    else:
        parent = build_hyperspace(
            base, Variant.LOWER if variant is Variant.FINITE_LOWER else Variant.UPPER
        )
        # every subset of a finite base is finite, so the restriction keeps all points
        keep = parent.carrier_mask(lambda m: True)
        opens = subspace(parent.space, keep).opens
    return Hyperspace(base, variant, points, FiniteSpace(labels, opens))


def minimal_hyper_neighborhood(h: Hyperspace, c) -> frozenset:
    i = h.position(c)
    u = h.space.minimal_opens[i]
    cm = h.points[i]
    if h.variant.lower_like:
        expected = h.carrier_mask(lambda d: cm & ~d == 0)
    else:
        expected = h.carrier_mask(lambda d: d & ~cm == 0)
    if u != expected:
        raise ConsistencyError(f"minimal neighborhood of {h.space.elements[i]} has the wrong shape")
    return h.hyperpoints_of(u)


def hyper_order(h: Hyperspace) -> Preorder:
    p = specialization_preorder(h.space)
    for a, ma in enumerate(h.points):
        for b, mb in enumerate(h.points):
            # p.le(a, b): a <= b
            if h.variant.lower_like:
                expected = mb & ~ma == 0  # a <= b iff b subset of a
            else:
                expected = ma & ~mb == 0
            if p.le(a, b) != expected:
                raise ConsistencyError("hyperspace order does not match inclusion")
    return p


def intersection_of_all_opens(h: Hyperspace) -> frozenset:
    if not h.variant.lower_like:
        raise ValueError("only defined for the lower-type hyperspaces")
    meet = h.space.full
    for o in h.space.opens:
        if o:
            meet &= o
    if meet != 1 << h.position(h.base.full):
        raise ConsistencyError("nonempty opens do not meet exactly in the full base set")
    return h.hyperpoints_of(meet)


def compare_topologies(a: FiniteSpace, b: FiniteSpace) -> Comparison:
    """How the open family of `a` relates to that of `b` on a shared carrier."""
    if a.elements != b.elements:
        raise CarrierMismatch("spaces have different carriers")
    if a.opens == b.opens:
        return Comparison.EQUAL
    if a.opens > b.opens:
        return Comparison.STRICTLY_FINER
    if a.opens < b.opens:
        return Comparison.STRICTLY_COARSER
    return Comparison.INCOMPARABLE


def embed_into_upper(x_space: FiniteSpace) -> tuple[PointMap, Hyperspace]:
    """Send each point x to its minimal open set U_x, a point of the upper hyperspace.

    The base of the hyperspace is the discrete space on the same labels.
    """
    if not is_T0(x_space):
        raise NotT0("two points share a minimal open neighborhood")
    h = build_hyperspace(discrete_space(x_space.elements), Variant.UPPER)
    f = PointMap(x_space.n, h.space.n, tuple(h.position(u) for u in x_space.minimal_opens))
    if not is_embedding(x_space, h.space, f):
        raise ConsistencyError("x -> U_x failed to be a topological embedding")
    return f, h
