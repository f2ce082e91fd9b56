"""Brute-force oracles that share no code path with the fast routines they check.

These go straight to definitions: relations as raw boolean matrices, maps as raw
tuples, topologies as raw sets of frozensets.
"""
from __future__ import annotations

import itertools

import numpy as np


def count_relations(n: int) -> tuple[int, int]:
    """(#preorders, #partial orders) on n labeled points, by checking every relation."""
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    preorders = posets = 0
    for choice in range(1 << len(off)):
        rel = {(i, i) for i in range(n)}
        rel.update(p for k, p in enumerate(off) if choice >> k & 1)
        if all((a, d) in rel for (a, b) in rel for (c, d) in rel if b == c):
            preorders += 1
            if all(not ((b, a) in rel and a != b) for (a, b) in rel):
                posets += 1
    return preorders, posets


def all_relations(n: int):
    """Every preorder on n points as a set of pairs (u, v) meaning u <= v."""
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    for choice in range(1 << len(off)):
        rel = {(i, i) for i in range(n)}
        rel.update(p for k, p in enumerate(off) if choice >> k & 1)
        if all((a, d) in rel for (a, b) in rel for (c, d) in rel if b == c):
            yield frozenset(rel)


def _as_sets(space):
    return [frozenset(i for i in range(space.n) if o >> i & 1) for o in space.opens]


def brute_force_homeomorphisms(space) -> list[tuple]:
    """Image tuples of all bijections f with f and f^-1 mapping opens to opens."""
    opens = set(_as_sets(space))
    out = []
    for perm in itertools.permutations(range(space.n)):
        forward = {frozenset(perm[i] for i in o) for o in opens}
        # for a bijection on a finite set, images of opens being exactly the opens
        # is equivalent to both directions being continuous
        if forward == opens:
            out.append(perm)
    return sorted(out)


def grid_group_law_violation(phi_at, denominator: int = 4, extent: int = 16):
    """Search the grid {p/denominator : |p| <= extent} for s, t with phi_{s+t} != phi_s o phi_t.

    `phi_at(t)` must return the image tuple of the time-t map for every t in the
    doubled grid.  Returns (s, t) as (numerator, numerator) pairs over the common
    denominator, or None.
    """
    from fractions import Fraction

    steps = np.arange(-extent, extent + 1)
    sums = np.arange(-2 * extent, 2 * extent + 1)
    grid = np.array([phi_at(Fraction(int(p), denominator)) for p in steps])
    total = np.array([phi_at(Fraction(int(p), denominator)) for p in sums])
    # composed[a, b, x] = phi_{s_a}(phi_{t_b}(x))
    composed = grid[np.arange(len(steps))[:, None, None], grid[None, :, :]]
    target = total[steps[:, None] + steps[None, :] + 2 * extent]
    bad = np.argwhere((composed != target).any(axis=2))
    if len(bad) == 0:
        return None
    a, b = bad[0]
    return int(steps[a]), int(steps[b])
