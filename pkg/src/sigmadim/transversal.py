"""Exact minimum hitting set by branch and bound.

A hitting set instance is a collection of non-empty constraint sets over
hashable elements; a hitting set touches every constraint.  Instances in
this package come from squarefree monomial supports and shifted family
members, so they are small (tens of cells) but the generic problem is
NP-hard: plain 2^cells enumeration would cap the usable window size, hence
branch and bound with

  * superset (dominance) elimination,
  * unit-constraint propagation,
  * a greedy upper bound, and
  * a disjoint-constraint packing lower bound.

All element iteration is over sorted lists, so results are deterministic.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Optional


def _normalize(sets: Iterable[Iterable[Hashable]]) -> Optional[list[frozenset]]:
    """Dedupe and drop dominated (superset) constraints.

    Returns None if some constraint is empty (no hitting set exists)."""
    pool = sorted({frozenset(s) for s in sets}, key=lambda s: (len(s), sorted(s)))
    if pool and not pool[0]:
        return None
    kept: list[frozenset] = []
    for s in pool:
        if not any(k <= s for k in kept):
            kept.append(s)
    return kept


def _greedy_cover(constraints: list[frozenset]) -> set:
    """Upper bound: repeatedly pick the element hitting most constraints."""
    chosen: set = set()
    remaining = list(constraints)
    while remaining:
        counts: dict = {}
        for s in remaining:
            for x in s:
                counts[x] = counts.get(x, 0) + 1
        best = max(sorted(counts), key=lambda x: counts[x])
        chosen.add(best)
        remaining = [s for s in remaining if best not in s]
    return chosen


def _packing_bound(constraints: list[frozenset]) -> int:
    """Lower bound: size of a greedy pairwise-disjoint subfamily."""
    used: set = set()
    count = 0
    for s in sorted(constraints, key=lambda s: (len(s), sorted(s))):
        if not (s & used):
            count += 1
            used |= s
    return count


def minimum_hitting_set(sets: Iterable[Iterable[Hashable]]) -> Optional[frozenset]:
    """An optimal hitting set of the given constraints, or None if some
    constraint is empty.  The empty collection has hitting set frozenset()."""
    constraints = _normalize(sets)
    if constraints is None:
        return None
    if not constraints:
        return frozenset()

    best = _greedy_cover(constraints)

    def search(remaining: list[frozenset], chosen: set) -> None:
        nonlocal best
        # unit propagation: forced elements
        while True:
            units = [s for s in remaining if len(s) == 1]
            if not units:
                break
            for s in units:
                chosen |= s
            forced = set().union(*units)
            remaining = [s for s in remaining if not (s & forced)]
        if not remaining:
            if len(chosen) < len(best):
                best = set(chosen)
            return
        if len(chosen) + _packing_bound(remaining) >= len(best):
            return
        target = min(remaining, key=lambda s: (len(s), sorted(s)))
        for x in sorted(target):
            search([s for s in remaining if x not in s], chosen | {x})

    search(constraints, set())
    return frozenset(best)


def minimum_hitting_set_size(sets: Iterable[Iterable[Hashable]]) -> Optional[int]:
    """Size of an optimal hitting set, or None if infeasible."""
    hs = minimum_hitting_set(sets)
    return None if hs is None else len(hs)
