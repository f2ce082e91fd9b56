"""Exhaustive enumeration of small finite topologies."""
from __future__ import annotations

from typing import Iterator

from .errors import BudgetExceeded
from .space import FiniteSpace, is_topology

MAX_ENUMERATION_SIZE = 4


def enumerate_topologies(n: int) -> Iterator[FiniteSpace]:
    """Every topology on the points 0..n-1, each exactly once.

    Families are visited by the bitmask of their proper nonempty members, so the
    output order is fixed.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > MAX_ENUMERATION_SIZE:
        raise BudgetExceeded(f"enumeration is capped at n={MAX_ENUMERATION_SIZE}, got {n}")
    full = (1 << n) - 1
    middle = list(range(1, full))
    elements = tuple(range(n))
    for choice in range(1 << len(middle)):
        fam = [0, full]
        fam.extend(s for k, s in enumerate(middle) if choice >> k & 1)
        if is_topology(n, fam):
            yield FiniteSpace(elements, frozenset(fam))


def all_spaces(max_n: int = MAX_ENUMERATION_SIZE) -> Iterator[FiniteSpace]:
    for n in range(1, max_n + 1):
        yield from enumerate_topologies(n)
