"""Finite topological spaces, their specialization preorders, and maps between them.

Subsets of an n-element space are encoded as int bitmasks: bit i stands for the
i-th declared element.  Every finite space is Alexandroff, so each point x has a
smallest open set U_x, and the convention used everywhere is

    y <= x  iff  y in U_x.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Iterator, Sequence

from .errors import (
    ConsistencyError,
    DuplicateLabel,
    MalformedInput,
    MissingEmptyOrFull,
    NotAPreorder,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
)


def members(mask: int) -> Iterator[int]:
    """Indices of the set bits of `mask`, ascending."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def mask_from(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class FiniteSpace:
    """A finite ground set with a family of open subsets (as bitmasks).

    Constructing one directly trusts the caller; use `validate_space` for raw input.
    """

    elements: tuple
    opens: frozenset

    @property
    def n(self) -> int:
        return len(self.elements)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def _index(self) -> dict:
        return {label: i for i, label in enumerate(self.elements)}

    def index(self, label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise MalformedInput(f"unknown element {label!r}") from None

    def mask_of(self, labels: Iterable[Hashable]) -> int:
        return mask_from(self.index(label) for label in labels)

    def labels_of(self, mask: int) -> list:
        return [self.elements[i] for i in members(mask)]

    def sorted_opens(self) -> list[int]:
        return sorted(self.opens)

    def is_open(self, mask: int) -> bool:
        return mask in self.opens

    @cached_property
    def minimal_opens(self) -> tuple:
        """U_x for every index x, as bitmasks."""
        result = []
        for x in range(self.n):
            u = self.full
            for o in self.opens:
                if o >> x & 1:
                    u &= o
            result.append(u)
        return tuple(result)

    def __repr__(self):
        opens = ", ".join("{" + ",".join(map(str, self.labels_of(o))) + "}" for o in self.sorted_opens())
        return f"FiniteSpace({list(self.elements)!r}, [{opens}])"


@dataclass(frozen=True)
class Preorder:
    """Reflexive-transitive relation; ``leq[y][x]`` means y <= x."""

    leq: tuple

    def __post_init__(self):
        n = len(self.leq)
        if any(len(row) != n for row in self.leq):
            raise NotAPreorder("relation matrix is not square")
        for x in range(n):
            if not self.leq[x][x]:
                raise NotAPreorder(f"not reflexive at {x}")
        for z, y, x in itertools.product(range(n), repeat=3):
            if self.leq[z][y] and self.leq[y][x] and not self.leq[z][x]:
                raise NotAPreorder(f"not transitive: {z}<={y}<={x} but not {z}<={x}")

    @property
    def size(self) -> int:
        return len(self.leq)

    @classmethod
    def from_down_sets(cls, down: Sequence[int]) -> "Preorder":
        n = len(down)
        return cls(tuple(tuple(bool(down[x] >> y & 1) for x in range(n)) for y in range(n)))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Preorder":
        """Reflexive-transitive closure of the pairs (u, v) read as u <= v."""
        rel = [[x == y for x in range(n)] for y in range(n)]
        for u, v in pairs:
            rel[u][v] = True
        for k in range(n):
            for i in range(n):
                if rel[i][k]:
                    for j in range(n):
                        if rel[k][j]:
                            rel[i][j] = True
        return cls(tuple(tuple(row) for row in rel))

    def le(self, y: int, x: int) -> bool:
        return self.leq[y][x]

    @cached_property
    def down_sets(self) -> tuple:
        n = self.size
        return tuple(mask_from(y for y in range(n) if self.leq[y][x]) for x in range(n))

    def is_antisymmetric(self) -> bool:
        n = self.size
        return all(
            not (self.leq[x][y] and self.leq[y][x])
            for x in range(n)
            for y in range(x + 1, n)
        )

    def opposite(self) -> "Preorder":
        n = self.size
        return Preorder(tuple(tuple(self.leq[x][y] for x in range(n)) for y in range(n)))

    def pairs(self) -> list[tuple[int, int]]:
        n = self.size
        return [(y, x) for y in range(n) for x in range(n) if self.leq[y][x]]


@dataclass(frozen=True)
class PointMap:
    """A total function between index ranges, ``image[i]`` being the image of i."""

    domain_size: int
    codomain_size: int
    image: tuple

    def __post_init__(self):
        if len(self.image) != self.domain_size:
            raise MalformedInput("map is not total on its domain")
        if any(not 0 <= v < self.codomain_size for v in self.image):
            raise MalformedInput("map value outside codomain")

    @classmethod
    def identity(cls, n: int) -> "PointMap":
        return cls(n, n, tuple(range(n)))

    def __call__(self, i: int) -> int:
        return self.image[i]

    def compose(self, inner: "PointMap") -> "PointMap":
        """self after inner."""
        return PointMap(inner.domain_size, self.codomain_size, tuple(self.image[j] for j in inner.image))

    def is_bijection(self) -> bool:
        return self.domain_size == self.codomain_size and len(set(self.image)) == self.domain_size

    def inverse(self) -> "PointMap":
        if not self.is_bijection():
            raise ValueError("map is not a bijection")
        inv = [0] * self.domain_size
        for i, j in enumerate(self.image):
            inv[j] = i
        return PointMap(self.domain_size, self.domain_size, tuple(inv))

    def is_identity(self) -> bool:
        return self.image == tuple(range(self.domain_size))

    def preimage(self, mask: int) -> int:
        return mask_from(i for i, j in enumerate(self.image) if mask >> j & 1)

    def image_of(self, mask: int) -> int:
        return mask_from(self.image[i] for i in members(mask))


# -- construction and validation ------------------------------------------------


def validate_space(elements: Sequence[Hashable], opens: Iterable[Iterable[Hashable]]) -> FiniteSpace:
    """Check raw labels and open sets and return the space they describe.

    Axioms are checked in a fixed order (labels, union closure, intersection
    closure, empty/full) and the first violation is raised with a witness pair.
    """
    elements = tuple(elements)
    if not elements:
        raise MalformedInput("a space needs at least one element")
    seen = {}
    for i, label in enumerate(elements):
        if label in seen:
            raise DuplicateLabel(f"duplicate label {label!r}", witness=(seen[label], i))
        seen[label] = i
    index = {label: i for i, label in enumerate(elements)}
    masks = set()
    for subset in opens:
        m = 0
        for label in subset:
            if label not in index:
                raise MalformedInput(f"open set refers to undeclared element {label!r}")
            m |= 1 << index[label]
        masks.add(m)
    space = FiniteSpace(elements, frozenset(masks))
    ordered = sorted(masks)
    for a, b in itertools.combinations(ordered, 2):
        if a | b not in masks:
            raise NotClosedUnderUnion(
                f"union of {space.labels_of(a)} and {space.labels_of(b)} is not open",
                witness=(space.labels_of(a), space.labels_of(b)),
            )
    for a, b in itertools.combinations(ordered, 2):
        if a & b not in masks:
            raise NotClosedUnderIntersection(
                f"intersection of {space.labels_of(a)} and {space.labels_of(b)} is not open",
                witness=(space.labels_of(a), space.labels_of(b)),
            )
    if 0 not in masks or space.full not in masks:
        raise MissingEmptyOrFull("opens must contain the empty set and the whole space")
    return space


def is_topology(n: int, opens: Iterable[int]) -> bool:
    """Whether a family of bitmasks on n points is a (finite) topology."""
    fam = set(opens)
    if 0 not in fam or (1 << n) - 1 not in fam:
        return False
    ordered = sorted(fam)
    for a, b in itertools.combinations(ordered, 2):
        if a | b not in fam or a & b not in fam:
            return False
    return True


def generate_topology(n: int, subbase: Iterable[int]) -> frozenset:
    """Coarsest topology on n points containing every set of `subbase`."""
    full = (1 << n) - 1
    base = {full}
    for s in subbase:
        base |= {s & b for b in base}
        base.add(s)
    opens = {0}
    for b in sorted(base):
        opens |= {o | b for o in opens}
    return frozenset(opens)


def subspace(space: FiniteSpace, mask: int) -> FiniteSpace:
    """Subspace topology on the points of `mask`, keeping their relative order."""
    idx = list(members(mask))
    opens = set()
    for o in space.opens:
        opens.add(mask_from(k for k, i in enumerate(idx) if o >> i & 1))
    return FiniteSpace(tuple(space.elements[i] for i in idx), frozenset(opens))


# -- duality --------------------------------------------------------------------


def specialization_preorder(space: FiniteSpace) -> Preorder:
    return Preorder.from_down_sets(space.minimal_opens)


def topology_from_preorder(p: Preorder, elements: Sequence[Hashable] | None = None) -> FiniteSpace:
    """The Alexandroff topology whose opens are the down-closed subsets of p."""
    if elements is None:
        elements = tuple(range(p.size))
    opens = {0}
    for d in p.down_sets:
        opens |= {o | d for o in opens}
    return FiniteSpace(tuple(elements), frozenset(opens))


def is_down_closed(p: Preorder, mask: int) -> bool:
    return all(p.down_sets[x] & ~mask == 0 for x in members(mask))


def minimal_open_neighborhood(space: FiniteSpace, x: int) -> int:
    return space.minimal_opens[x]


# -- separation axioms ----------------------------------------------------------


def _t0_by_definition(space: FiniteSpace) -> bool:
    for x, y in itertools.combinations(range(space.n), 2):
        if not any((o >> x & 1) != (o >> y & 1) for o in space.opens):
            return False
    return True


def _t1_by_definition(space: FiniteSpace) -> bool:
    for x, y in itertools.permutations(range(space.n), 2):
        # some open contains x but not y
        if not any(o >> x & 1 and not o >> y & 1 for o in space.opens):
            return False
    return True


def is_discrete(space: FiniteSpace) -> bool:
    return len(space.opens) == 1 << space.n


def is_T0(space: FiniteSpace) -> bool:
    direct = _t0_by_definition(space)
    via_order = specialization_preorder(space).is_antisymmetric()
    if direct != via_order:
        raise ConsistencyError(f"T0 by definition ({direct}) disagrees with antisymmetry ({via_order})")
    return direct


def is_T1(space: FiniteSpace) -> bool:
    direct = _t1_by_definition(space)
    discrete = is_discrete(space)
    if direct != discrete:
        raise ConsistencyError(f"T1 by definition ({direct}) disagrees with discreteness ({discrete})")
    return direct


# -- maps -----------------------------------------------------------------------


def is_order_preserving(src: FiniteSpace, dst: FiniteSpace, f: PointMap) -> bool:
    ps, pd = specialization_preorder(src), specialization_preorder(dst)
    return all(pd.le(f(y), f(x)) for y, x in ps.pairs())


def _preimages_open(src: FiniteSpace, dst: FiniteSpace, f: PointMap) -> bool:
    return all(f.preimage(v) in src.opens for v in dst.opens)


def is_continuous(src: FiniteSpace, dst: FiniteSpace, f: PointMap) -> bool:
    if f.domain_size != src.n or f.codomain_size != dst.n:
        raise MalformedInput("map does not match the given spaces")
    by_opens = _preimages_open(src, dst, f)
    by_order = is_order_preserving(src, dst, f)
    if by_opens != by_order:
        raise ConsistencyError(f"preimage test ({by_opens}) disagrees with order test ({by_order})")
    return by_opens


def is_homeomorphism(src: FiniteSpace, dst: FiniteSpace, f: PointMap) -> bool:
    return f.is_bijection() and is_continuous(src, dst, f) and is_continuous(dst, src, f.inverse())


def is_embedding(src: FiniteSpace, dst: FiniteSpace, f: PointMap) -> bool:
    """Injective, continuous, and a homeomorphism onto its image with the subspace topology."""
    if len(set(f.image)) != f.domain_size or not is_continuous(src, dst, f):
        return False
    image_mask = mask_from(f.image)
    sub = subspace(dst, image_mask)
    # position of each dst index inside the subspace ordering
    pos = {i: k for k, i in enumerate(members(image_mask))}
    g = PointMap(src.n, sub.n, tuple(pos[j] for j in f.image))
    return is_homeomorphism(src, sub, g)


def enumerate_homeomorphisms(space: FiniteSpace) -> list[PointMap]:
    """Order automorphisms of the specialization preorder, by backtracking.

    Output is sorted by image tuple; the identity always comes first.
    """
    p = specialization_preorder(space)
    n = p.size
    leq = p.leq
    found = []
    image = [0] * n
    used = [False] * n

    def extend(k):
        if k == n:
            found.append(PointMap(n, n, tuple(image)))
            return
        for v in range(n):
            if used[v]:
                continue
            if all(
                leq[k][j] == leq[v][image[j]] and leq[j][k] == leq[image[j]][v]
                for j in range(k)
            ):
                used[v] = True
                image[k] = v
                extend(k + 1)
                used[v] = False

    extend(0)
    return found
