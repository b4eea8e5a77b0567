"""Shared helpers: tiny builders and independent brute-force oracles.

The oracles deliberately avoid the library's own algorithms: hitting sets
by subset enumeration, interval transversals by combinations over
placements, free subsets by window enumeration.
"""

from __future__ import annotations

from itertools import chain, combinations

from sigmadim import DifferencePolynomial, SigmaMonomial, parse_polynomial


def poly(text: str, n: int) -> DifferencePolynomial:
    return parse_polynomial(text, n)


def mono(text: str, n: int) -> SigmaMonomial:
    p = parse_polynomial(text, n)
    (m,) = p.monomials()
    return m


def brute_min_hitting_set_size(sets) -> int | None:
    """Exhaustive minimum hitting set size (None if infeasible)."""
    sets = [frozenset(s) for s in sets]
    if any(not s for s in sets):
        return None
    universe = sorted(set(chain.from_iterable(sets)))
    for k in range(len(universe) + 1):
        for combo in combinations(universe, k):
            chosen = set(combo)
            if all(s & chosen for s in sets):
                return k
    raise AssertionError("unreachable")


def brute_tau_interval(elements, i: int) -> int:
    """Exhaustive minimum number of translates of E covering {1..i}."""
    E = sorted(elements)
    span = E[-1] - E[0]
    positions = list(range(1 - span, i + 1))
    target = set(range(1, i + 1))
    for k in range(len(positions) + 1):
        for combo in combinations(positions, k):
            cover = set()
            for t in combo:
                cover.update(t + e - E[0] for e in E)
            if target <= cover:
                return k
    raise AssertionError("unreachable")


def brute_max_free_size(family, i: int) -> int:
    """Exhaustive maximum free subset size of the order-i window."""
    cells = [(a, j) for a in range(i + 1) for j in range(1, family.n + 1)]
    masks = []
    for s in family.members:
        for ell in range(i - s.ord + 1):
            shifted = s.shifted(ell)
            mask = 0
            for c in shifted:
                mask |= 1 << cells.index(c)
            masks.append(mask)
    best = 0
    for pick in range(1 << len(cells)):
        if any(mask & ~pick == 0 for mask in masks):
            continue
        best = max(best, bin(pick).count("1"))
    return best
