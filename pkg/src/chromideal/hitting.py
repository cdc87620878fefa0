"""Exact minimum hitting sets over bitmask-encoded families.

Each set is an ``int`` whose bit ``v`` is set when variable ``v`` belongs to
it.  Both routines branch on the uncovered set with the fewest live
variables, trying its variables in ascending index order and excluding each
one from later sibling branches, so every hitting set is visited at most
once and the search order is fully deterministic.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .errors import DomainError


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def reduce_family(sets: Sequence[int]) -> list[int]:
    """Drop duplicates and supersets; hitting the rest hits everything."""
    if any(s == 0 for s in sets):
        raise DomainError("an empty set cannot be hit")
    uniq = sorted(set(sets), key=lambda s: (s.bit_count(), s))
    kept: list[int] = []
    for s in uniq:
        if not any(k & s == k for k in kept):
            kept.append(s)
    return kept


def _packing_bound(live: list[int]) -> int:
    # pairwise-disjoint sets each need their own variable
    used = 0
    count = 0
    for s in sorted(live, key=lambda s: (s.bit_count(), s)):
        if not s & used:
            used |= s
            count += 1
    return count


def greedy_hitting_set(sets: Sequence[int]) -> int:
    remaining = list(sets)
    chosen = 0
    while remaining:
        counts: dict[int, int] = {}
        for s in remaining:
            for v in _bits(s):
                counts[v] = counts.get(v, 0) + 1
        best = min(counts, key=lambda v: (-counts[v], v))
        chosen |= 1 << best
        remaining = [s for s in remaining if not s >> best & 1]
    return chosen


def minimum_hitting_set(sets: Sequence[int]) -> int:
    """Return a minimum-cardinality hitting set as a bitmask.

    Among optimal sets the one reached first by the deterministic search is
    returned.  An empty family is hit by the empty set.
    """
    family = reduce_family(sets)
    if not family:
        return 0
    best = [greedy_hitting_set(family)]
    best_size = [best[0].bit_count()]

    def search(chosen: int, size: int, excluded: int, uncovered: list[int]) -> None:
        if not uncovered:
            if size < best_size[0]:
                best[0], best_size[0] = chosen, size
            return
        live = []
        for s in uncovered:
            t = s & ~excluded
            if not t:
                return
            live.append(t)
        if size + _packing_bound(live) >= best_size[0]:
            return
        pivot = min(live, key=lambda s: (s.bit_count(), s))
        for v in _bits(pivot):
            bit = 1 << v
            search(chosen | bit, size + 1, excluded, [s for s in uncovered if not s & bit])
            excluded |= bit

    search(0, 0, 0, family)
    return best[0]


def hitting_sets_of_size(sets: Sequence[int], size: int) -> list[int]:
    """All hitting sets with exactly ``size`` elements, when ``size`` is the minimum.

    The caller guarantees ``size`` equals the minimum hitting-set size;
    under that assumption every hitting set of that size is minimal and is
    produced exactly once.  Output is sorted by ascending bitmask.
    """
    family = reduce_family(sets)
    found: list[int] = []

    def search(chosen: int, k: int, excluded: int, uncovered: list[int]) -> None:
        if not uncovered:
            if k == size:
                found.append(chosen)
            return
        live = []
        for s in uncovered:
            t = s & ~excluded
            if not t:
                return
            live.append(t)
        if k + _packing_bound(live) > size:
            return
        pivot = min(live, key=lambda s: (s.bit_count(), s))
        for v in _bits(pivot):
            bit = 1 << v
            search(chosen | bit, k + 1, excluded, [s for s in uncovered if not s & bit])
            excluded |= bit

    search(0, 0, 0, family)
    return sorted(found)
