"""Exact finite unions of rational intervals on the real line.

Endpoints are `Fraction`s, or ``-math.inf`` / ``math.inf`` for unbounded sides
(never closed).  A `TimeSet` keeps its components sorted, disjoint and
non-adjacent, so two equal sets have equal representations.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import count
from typing import Iterable, Optional, Union

Endpoint = Union[Fraction, float]

NEG_INF = -math.inf
POS_INF = math.inf


def as_rational(value) -> Fraction:
    """Parse ints, Fractions and strings like "3", "-1/2" exactly; floats are refused."""
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact times")
    return Fraction(value)


@dataclass(frozen=True)
class Interval:
    lo: Endpoint
    hi: Endpoint
    lo_closed: bool
    hi_closed: bool

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty interval")
        if self.lo == self.hi and not (self.lo_closed and self.hi_closed):
            raise ValueError("empty interval")
        if (self.lo_closed and _is_inf(self.lo)) or (self.hi_closed and _is_inf(self.hi)):
            raise ValueError("infinite endpoints cannot be closed")

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, t) -> bool:
        if t < self.lo or t > self.hi:
            return False
        if t == self.lo and not self.lo_closed:
            return False
        if t == self.hi and not self.hi_closed:
            return False
        return True

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo, self.hi_closed, self.lo_closed)

    def __add__(self, other: "Interval") -> "Interval":
        """Minkowski sum."""
        return Interval(
            self.lo + other.lo,
            self.hi + other.hi,
            self.lo_closed and other.lo_closed,
            self.hi_closed and other.hi_closed,
        )

    def __str__(self):
        if self.is_point:
            return "{%s}" % self.lo
        lo = "-oo" if self.lo == NEG_INF else str(self.lo)
        hi = "oo" if self.hi == POS_INF else str(self.hi)
        return ("[" if self.lo_closed else "(") + lo + "," + hi + ("]" if self.hi_closed else ")")


def _endpoint(x) -> Endpoint:
    if isinstance(x, float):
        if not math.isinf(x):
            raise TypeError("finite endpoints must be exact rationals")
        return x
    return Fraction(x)


def _is_inf(x) -> bool:
    return isinstance(x, float)


def interval(lo, hi, lo_closed=False, hi_closed=False) -> Optional[Interval]:
    """Build an interval, or None when the bounds describe the empty set."""
    lo, hi = _endpoint(lo), _endpoint(hi)
    lo_closed = lo_closed and not _is_inf(lo)
    hi_closed = hi_closed and not _is_inf(hi)
    if lo > hi or (lo == hi and not (lo_closed and hi_closed)):
        return None
    return Interval(lo, hi, lo_closed, hi_closed)


def point(t) -> Interval:
    t = as_rational(t)
    return Interval(t, t, True, True)


REAL_LINE = Interval(NEG_INF, POS_INF, False, False)


def intersect(a: Interval, b: Interval) -> Optional[Interval]:
    if a.lo > b.lo:
        lo, lo_closed = a.lo, a.lo_closed
    elif a.lo < b.lo:
        lo, lo_closed = b.lo, b.lo_closed
    else:
        lo, lo_closed = a.lo, a.lo_closed and b.lo_closed
    if a.hi < b.hi:
        hi, hi_closed = a.hi, a.hi_closed
    elif a.hi > b.hi:
        hi, hi_closed = b.hi, b.hi_closed
    else:
        hi, hi_closed = a.hi, a.hi_closed and b.hi_closed
    return interval(lo, hi, lo_closed, hi_closed)


def simplest_in(iv: Interval) -> Fraction:
    """The rational in `iv` with the smallest denominator, then smallest magnitude.

    Positive values win ties, so the simplest point of the whole line is 0 and of
    (0, oo) is 1.
    """
    if iv.is_point:
        return iv.lo
    if iv.contains(0):
        return Fraction(0)
    if iv.hi <= 0:
        return -simplest_in(-iv)
    if _is_inf(iv.hi):
        hi_ok = lambda v: True  # noqa: E731
    else:
        hi_ok = lambda v: v < iv.hi or (v == iv.hi and iv.hi_closed)  # noqa: E731
    for q in count(1):
        p = math.floor(iv.lo * q)
        if not (Fraction(p, q) == iv.lo and iv.lo_closed):
            p += 1
        v = Fraction(p, q)
        if hi_ok(v):
            return v


def _sort_key(iv: Interval):
    return (iv.lo, not iv.lo_closed)


def _touches(a: Interval, b: Interval) -> bool:
    # assumes a.lo <= b.lo; true when a and b union to one interval
    return a.hi > b.lo or (a.hi == b.lo and (a.hi_closed or b.lo_closed))


def _hull(a: Interval, b: Interval) -> Interval:
    if b.hi > a.hi:
        hi, hi_closed = b.hi, b.hi_closed
    elif b.hi < a.hi:
        hi, hi_closed = a.hi, a.hi_closed
    else:
        hi, hi_closed = a.hi, a.hi_closed or b.hi_closed
    return Interval(a.lo, hi, a.lo_closed, hi_closed)


@dataclass(frozen=True)
class TimeSet:
    components: tuple = ()

    @classmethod
    def of(cls, intervals: Iterable[Optional[Interval]]) -> "TimeSet":
        ivs = sorted((iv for iv in intervals if iv is not None), key=_sort_key)
        merged: list[Interval] = []
        for iv in ivs:
            if merged and _touches(merged[-1], iv):
                merged[-1] = _hull(merged[-1], iv)
            else:
                merged.append(iv)
        return cls(tuple(merged))

    @classmethod
    def empty(cls) -> "TimeSet":
        return cls(())

    @classmethod
    def real_line(cls) -> "TimeSet":
        return cls((REAL_LINE,))

    def is_empty(self) -> bool:
        return not self.components

    def contains(self, t) -> bool:
        return any(iv.contains(t) for iv in self.components)

    def __or__(self, other: "TimeSet") -> "TimeSet":
        return TimeSet.of(self.components + other.components)

    def __and__(self, other: "TimeSet") -> "TimeSet":
        return TimeSet.of(intersect(a, b) for a in self.components for b in other.components)

    def complement(self) -> "TimeSet":
        gaps = []
        lo, lo_closed = NEG_INF, False
        for iv in self.components:
            gaps.append(interval(lo, iv.lo, lo_closed, not iv.lo_closed))
            lo, lo_closed = iv.hi, not iv.hi_closed
        gaps.append(interval(lo, POS_INF, lo_closed, False))
        return TimeSet.of(gaps)

    def __sub__(self, other: "TimeSet") -> "TimeSet":
        return self & other.complement()

    def issubset(self, other: "TimeSet") -> bool:
        return (self - other).is_empty()

    def interior(self) -> "TimeSet":
        # components are non-adjacent, so interiors can be taken one by one
        return TimeSet.of(
            interval(iv.lo, iv.hi, False, False) for iv in self.components if not iv.is_point
        )

    def component_containing(self, t) -> Optional[Interval]:
        for iv in self.components:
            if iv.contains(t):
                return iv
        return None

    def simplest_point(self) -> Fraction:
        if not self.components:
            raise ValueError("empty time set has no points")
        return min((simplest_in(iv) for iv in self.components), key=lambda v: (v.denominator, abs(v), v < 0))

    def __str__(self):
        if not self.components:
            return "{}"
        return " u ".join(str(iv) for iv in self.components)
