"""Candidate flows R x X -> X given by piecewise-constant schedules, and an exact verifier.

A schedule with breakpoints b_1 < ... < b_k splits the line into the 2k+1 pieces

    (-oo, b_1), {b_1}, (b_1, b_2), ..., {b_k}, (b_k, oo)

and assigns a self-map of X to each.  On this representation all three flow
axioms are decided exactly:

* identity at zero: the piece containing 0 carries the identity;
* group law: for pieces P, Q with maps f, g every piece meeting the sumset P + Q
  must carry f o g;
* continuity: for every minimal open V and point x, the times sending x into V
  must lie in the interior of the times sending all of U_x into V.
"""
from __future__ import annotations

import enum
import itertools
import math
from bisect import bisect_left
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import comb
from typing import Hashable, Iterable, Mapping, Optional, Sequence

from .errors import BudgetExceeded, InvalidCandidate
from .space import FiniteSpace, PointMap, enumerate_homeomorphisms, members
from .timeset import Interval, TimeSet, as_rational, intersect, interval, point, simplest_in

UNBOUNDED = math.inf
SEARCH_BUDGET = 10**7


class Axiom(str, enum.Enum):
    IDENTITY_AT_ZERO = "identity_at_zero"
    CONTINUITY = "continuity"
    GROUP_LAW = "group_law"


def schedule_pieces(breakpoints: Sequence[Fraction]) -> tuple:
    bps = list(breakpoints)
    edges = [-math.inf] + bps + [math.inf]
    pieces = []
    for k in range(len(bps) + 1):
        pieces.append(interval(edges[k], edges[k + 1]))
        if k < len(bps):
            pieces.append(point(bps[k]))
    return tuple(pieces)


@dataclass(frozen=True)
class StepSchedule:
    breakpoints: tuple
    assignment: tuple

    def __post_init__(self):
        bps = tuple(as_rational(b) for b in self.breakpoints)
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "assignment", tuple(self.assignment))
        if any(a >= b for a, b in zip(bps, bps[1:])):
            raise InvalidCandidate("breakpoints must be strictly increasing")
        if len(self.assignment) != 2 * len(bps) + 1:
            raise InvalidCandidate(
                f"{len(bps)} breakpoints need {2 * len(bps) + 1} pieces, got {len(self.assignment)}"
            )

    @cached_property
    def pieces(self) -> tuple:
        return schedule_pieces(self.breakpoints)

    def piece_index(self, t) -> int:
        i = bisect_left(self.breakpoints, t)
        if i < len(self.breakpoints) and self.breakpoints[i] == t:
            return 2 * i + 1
        return 2 * i


@dataclass(frozen=True)
class FlowCandidate:
    space: FiniteSpace
    maps: Mapping[str, PointMap] = field(hash=False)
    schedule: StepSchedule

    def __post_init__(self):
        n = self.space.n
        for name, f in self.maps.items():
            if f.domain_size != n or f.codomain_size != n:
                raise InvalidCandidate(f"map {name!r} is not a self-map of the space")
        for name in self.schedule.assignment:
            if name not in self.maps:
                raise InvalidCandidate(f"schedule refers to unknown map {name!r}")

    @classmethod
    def build(cls, space: FiniteSpace, maps: Mapping, breakpoints: Iterable, pieces: Iterable[str]):
        """Convenience constructor; maps may be given as {label: label} dicts."""
        table = {}
        for name, f in maps.items():
            if not isinstance(f, PointMap):
                if set(f) != set(space.elements):
                    raise InvalidCandidate(f"map {name!r} must assign every element exactly once")
                f = PointMap(space.n, space.n, tuple(space.index(f[x]) for x in space.elements))
            table[name] = f
        return cls(space, table, StepSchedule(tuple(breakpoints), tuple(pieces)))

    @property
    def pieces(self) -> tuple:
        return self.schedule.pieces

    @cached_property
    def images(self) -> tuple:
        """Image tuple of the map on each piece."""
        return tuple(self.maps[name].image for name in self.schedule.assignment)

    def map_at(self, t) -> tuple:
        return self.images[self.schedule.piece_index(as_rational(t))]


def evaluate(c: FlowCandidate, t, x: Hashable):
    """phi(t, x) for an element label x."""
    return c.space.elements[c.map_at(t)[c.space.index(x)]]


def trivial_candidate(space: FiniteSpace) -> FlowCandidate:
    return FlowCandidate(space, {"id": PointMap.identity(space.n)}, StepSchedule((), ("id",)))


def swap_candidate(space: FiniteSpace, x: Hashable, y: Hashable) -> FlowCandidate:
    """Exchange x and y at every nonzero time; the identity at time zero."""
    i, j = space.index(x), space.index(y)
    if i == j:
        raise ValueError("swap needs two distinct points")
    image = list(range(space.n))
    image[i], image[j] = j, i
    maps = {"id": PointMap.identity(space.n), "swap": PointMap(space.n, space.n, tuple(image))}
    return FlowCandidate(space, maps, StepSchedule((0,), ("swap", "id", "swap")))


# -- verdicts -------------------------------------------------------------------


@dataclass(frozen=True)
class AxiomResult:
    axiom: Axiom
    passed: bool
    witness: Optional[dict] = None
    # group law only: (i, j, bad pieces) for every failing ordered piece pair
    failures: tuple = ()


@dataclass(frozen=True)
class FlowVerdict:
    passed: bool
    results: dict
    failed_axiom: Optional[Axiom] = None
    witness: Optional[dict] = None


def check_identity_at_zero(c: FlowCandidate) -> AxiomResult:
    img = c.map_at(0)
    for x, v in enumerate(img):
        if v != x:
            el = c.space.elements
            return AxiomResult(Axiom.IDENTITY_AT_ZERO, False, {"t": Fraction(0), "x": el[x], "phi": el[v]})
    return AxiomResult(Axiom.IDENTITY_AT_ZERO, True)


def _compose(outer: tuple, inner: tuple) -> tuple:
    return tuple(outer[v] for v in inner)


def sumset_table(pieces: Sequence[Interval]) -> dict:
    """For each ordered pair (i, j), the pieces meeting P_i + P_j."""
    table = {}
    for i, pi in enumerate(pieces):
        for j, pj in enumerate(pieces):
            s = pi + pj
            table[i, j] = tuple(k for k, pk in enumerate(pieces) if intersect(pk, s) is not None)
    return table


def _group_law_failures(images, table, order, first_only=False) -> list:
    failures = []
    for i, j in order:
        comp = _compose(images[i], images[j])
        bad = [k for k in table[i, j] if images[k] != comp]
        if bad:
            failures.append((i, j, tuple(bad)))
            if first_only:
                break
    return failures


def _pair_order(pieces) -> list:
    # simplest representatives first, so failures near zero surface before far ones
    rank = sorted(range(len(pieces)), key=lambda k: _simplicity(simplest_in(pieces[k])))
    return [(i, j) for i in rank for j in rank]


def _simplicity(v: Fraction):
    return (v.denominator, abs(v), v < 0)


def _group_law_witness(c: FlowCandidate, i: int, j: int, bad: Sequence[int]) -> tuple:
    pieces, images = c.pieces, c.images
    comp = _compose(images[i], images[j])
    s, t = simplest_in(pieces[i]), simplest_in(pieces[j])
    if c.map_at(s + t) == comp:
        # the simplest pair happens to agree; aim straight at a bad piece instead
        target = simplest_in(intersect(pieces[bad[0]], pieces[i] + pieces[j]))
        s = simplest_in(intersect(pieces[i], point(target) + (-pieces[j])))
        t = target - s
    return s, t


def check_group_law(c: FlowCandidate) -> AxiomResult:
    pieces = c.pieces
    failures = _group_law_failures(c.images, sumset_table(pieces), _pair_order(pieces))
    if not failures:
        return AxiomResult(Axiom.GROUP_LAW, True)
    best = None
    for i, j, bad in failures:
        s, t = _group_law_witness(c, i, j, bad)
        key = (max(s.denominator, t.denominator), abs(s) + abs(t), s < 0, t < 0)
        if best is None or key < best[0]:
            best = (key, s, t)
    _, s, t = best
    lhs = c.map_at(s + t)
    rhs = _compose(c.map_at(s), c.map_at(t))
    x = next(k for k in range(c.space.n) if lhs[k] != rhs[k])
    el = c.space.elements
    witness = {"s": s, "t": t, "x": el[x], "phi_s_plus_t": el[lhs[x]], "phi_s_of_phi_t": el[rhs[x]]}
    return AxiomResult(Axiom.GROUP_LAW, False, witness, tuple(failures))


def time_set_into(c: FlowCandidate, x: int, target: int) -> TimeSet:
    """{t : phi(t, x) lies in the index set `target`}."""
    return TimeSet.of(p for p, img in zip(c.pieces, c.images) if target >> img[x] & 1)


def check_continuity(c: FlowCandidate) -> AxiomResult:
    space = c.space
    minimal = space.minimal_opens
    for v in sorted(set(minimal)):
        w = [time_set_into(c, x, v) for x in range(space.n)]
        for x in range(space.n):
            if w[x].is_empty():
                continue
            stable = TimeSet.real_line()
            for y in members(minimal[x]):
                stable = stable & w[y]
            bad = w[x] - stable.interior()
            if not bad.is_empty():
                witness = {"open": space.labels_of(v), "x": space.elements[x], "t": bad.simplest_point()}
                return AxiomResult(Axiom.CONTINUITY, False, witness)
    return AxiomResult(Axiom.CONTINUITY, True)


def _inverse_law_violation(c: FlowCandidate) -> Optional[dict]:
    """First piece whose map is not a bijection undone by the map at the negated times."""
    n = c.space.n
    ident = tuple(range(n))
    for k, piece in enumerate(c.pieces):
        img = c.images[k]
        for m, other in enumerate(c.pieces):
            meet = intersect(other, -piece)
            if meet is None:
                continue
            if len(set(img)) != n or _compose(c.images[m], img) != ident:
                u = simplest_in(-meet)
                return {"s": -u, "t": u, "reason": "phi_{-t} is not the inverse of phi_t"}
    return None


def is_flow(c: FlowCandidate) -> FlowVerdict:
    results = {
        Axiom.IDENTITY_AT_ZERO: check_identity_at_zero(c),
        Axiom.CONTINUITY: check_continuity(c),
        Axiom.GROUP_LAW: check_group_law(c),
    }
    if results[Axiom.IDENTITY_AT_ZERO].passed and results[Axiom.GROUP_LAW].passed:
        violation = _inverse_law_violation(c)
        if violation is not None:
            results[Axiom.GROUP_LAW] = AxiomResult(Axiom.GROUP_LAW, False, violation)
    for axiom in Axiom:
        r = results[axiom]
        if not r.passed:
            return FlowVerdict(False, results, axiom, r.witness)
    return FlowVerdict(True, results)


def is_trivial(c: FlowCandidate) -> bool:
    ident = tuple(range(c.space.n))
    return all(img == ident for img in c.images)


def local_stability_radius(c: FlowCandidate, x: Hashable):
    """Largest r with phi((-r, r) x U_x) inside U_x.

    Returns a Fraction, `UNBOUNDED` (math.inf) when every radius works, or None
    when no positive radius does.
    """
    u = c.space.minimal_opens[c.space.index(x)]
    stable = TimeSet.real_line()
    for y in members(u):
        stable = stable & time_set_into(c, y, u)
    iv = stable.interior().component_containing(0)
    if iv is None:
        return None
    return min(-iv.lo, iv.hi)


# -- normal form and search -----------------------------------------------------


def semantic_key(c: FlowCandidate) -> tuple:
    """Breakpoints and piece images after dropping breakpoints that change nothing."""
    bps, imgs = list(c.schedule.breakpoints), list(c.images)
    keep_bps, keep_imgs = [], [imgs[0]]
    for k, b in enumerate(bps):
        left, at, right = imgs[2 * k], imgs[2 * k + 1], imgs[2 * k + 2]
        if left == at == right:
            continue
        keep_bps.append(b)
        keep_imgs.extend([at, right])
    return tuple(keep_bps), tuple(keep_imgs)


def normalize(c: FlowCandidate) -> FlowCandidate:
    bps, imgs = semantic_key(c)
    names = {}
    for name, f in c.maps.items():
        names.setdefault(f.image, name)
    n = c.space.n
    maps, assignment = {}, []
    for img in imgs:
        name = names[img]
        maps[name] = PointMap(n, n, img)
        assignment.append(name)
    return FlowCandidate(c.space, maps, StepSchedule(bps, tuple(assignment)))


def candidate_count(pool_size: int, max_breakpoints: int, n_maps: int) -> int:
    return sum(comb(pool_size, k) * n_maps ** (2 * k + 1) for k in range(max_breakpoints + 1))


def _self_maps(space: FiniteSpace, homeo_only: bool) -> list[tuple]:
    n = space.n
    ident = tuple(range(n))
    if homeo_only:
        images = [f.image for f in enumerate_homeomorphisms(space)]
    else:
        images = list(itertools.product(range(n), repeat=n))
    return [ident] + sorted(img for img in images if img != ident)


def search_flows(
    space: FiniteSpace,
    pool: Iterable,
    max_breakpoints: int,
    homeo_only: bool = False,
    budget: int = SEARCH_BUDGET,
) -> list[FlowCandidate]:
    """Every step-schedule flow with breakpoints from `pool`, one per induced phi.

    The search is exhaustive over all schedules with at most `max_breakpoints`
    breakpoints and any self-map (or homeomorphism, with `homeo_only`) per piece.
    Schedules whose zero piece is not the identity are skipped up front, since
    they can never pass.  Results are normalized and listed in enumeration order.
    """
    pool = sorted({as_rational(p) for p in pool})
    images = _self_maps(space, homeo_only)
    total = candidate_count(len(pool), max_breakpoints, len(images))
    if total > budget:
        raise BudgetExceeded(f"{total} candidates exceed the budget of {budget}")
    n = space.n
    names = ["id"] + [f"f{k}" for k in range(1, len(images))]
    table = {name: PointMap(n, n, img) for name, img in zip(names, images)}

    found = {}
    for k in range(min(max_breakpoints, len(pool)) + 1):
        for bps in itertools.combinations(pool, k):
            pieces = schedule_pieces(bps)
            sums = sumset_table(pieces)
            order = _pair_order(pieces)
            zero = StepSchedule(bps, ("id",) * len(pieces)).piece_index(0)
            slots = [range(1) if p == zero else range(len(images)) for p in range(len(pieces))]
            for choice in itertools.product(*slots):
                imgs = tuple(images[q] for q in choice)
                if _group_law_failures(imgs, sums, order, first_only=True):
                    continue
                cand = FlowCandidate(space, table, StepSchedule(bps, tuple(names[q] for q in choice)))
                if not is_flow(cand).passed:
                    continue
                key = semantic_key(cand)
                if key not in found:
                    found[key] = normalize(cand)
    return list(found.values())

