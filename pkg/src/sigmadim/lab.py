"""Brute-force sequence-solution oracle over small prime fields.

Enumerates all assignments of the window {0..i} x {1..n} to F_p and keeps
those satisfying every applicable shifted equation exactly.  This is a
heuristic companion to the exact combinatorics: projection counts of 1 on
a coordinate set are necessary evidence of freeness, not proof, because
the free-set theory lives over large algebraically closed fields.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .polynomials import DifferencePolynomial

DEFAULT_BUDGET = 10**7


class BudgetExceededError(ValueError):
    """Enumeration would exceed the point budget."""


Cell = tuple[int, int]


@dataclass(frozen=True)
class TruncatedSolutionSet:
    """Exact solution set of the shift-truncated system over F_p.

    Points are tuples over the window cells sorted by (shift, index); the
    listing follows the enumeration odometer (last cell fastest)."""

    p: int
    i: int
    n: int
    cells: tuple[Cell, ...]
    points: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.points)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def enumerate_truncated_solutions(
    F: Sequence[DifferencePolynomial],
    p: int,
    i: int,
    budget: int = DEFAULT_BUDGET,
) -> TruncatedSolutionSet:
    """All window assignments satisfying s^l(f) for every f in F and every
    l with l + ord(f) <= i, by exhaustive enumeration over F_p.

    Coefficients must be integers (they are reduced mod p)."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if i < 0:
        raise ValueError("window order must be >= 0")
    if not F:
        raise ValueError("empty system")
    n = F[0].num_vars
    cells = tuple((a, j) for a in range(i + 1) for j in range(1, n + 1))
    total = p ** len(cells)
    if total > budget:
        raise BudgetExceededError(
            f"p^(n(i+1)) = {total} exceeds the enumeration budget {budget}"
        )

    shifted = []
    for f in F:
        if f.is_zero:
            continue
        o = f.order() or 0
        for ell in range(i - o + 1):
            shifted.append(f.shifted(ell))

    cell_pos = {c: k for k, c in enumerate(cells)}
    idx = np.arange(total, dtype=np.int64)
    ncells = len(cells)
    cell_vals: dict[Cell, np.ndarray] = {}

    def values(cell: Cell) -> np.ndarray:
        if cell not in cell_vals:
            k = cell_pos[cell]
            cell_vals[cell] = (idx // p ** (ncells - 1 - k)) % p
        return cell_vals[cell]

    ok = np.ones(total, dtype=bool)
    for g in shifted:
        acc = np.zeros(total, dtype=np.int64)
        for m, c in g.terms.items():
            if c.denominator != 1:
                raise ValueError(f"non-integer coefficient {c} in {g}")
            term = np.full(total, int(c) % p, dtype=np.int64)
            for v, e in m.exps:
                term = (term * pow_mod(values((v.shift, v.index)), e, p)) % p
            acc = (acc + term) % p
        ok &= acc == 0

    sols = np.nonzero(ok)[0]
    points = []
    for s in sols.tolist():
        point = []
        for k in range(ncells):
            point.append((s // p ** (ncells - 1 - k)) % p)
        points.append(tuple(point))
    return TruncatedSolutionSet(p=p, i=i, n=n, cells=cells, points=tuple(points))


def pow_mod(base: np.ndarray, e: int, p: int) -> np.ndarray:
    out = np.ones_like(base)
    b = base % p
    while e:
        if e & 1:
            out = (out * b) % p
        b = (b * b) % p
        e >>= 1
    return out


def projection_count(sols: TruncatedSolutionSet, T: Iterable[Cell]) -> int:
    """Cardinality of the image of the solution set under projection to T."""
    cells = sorted((int(a), int(j)) for a, j in T)
    pos = []
    for c in cells:
        if c not in sols.cells:
            raise ValueError(f"cell {c} outside the window")
        pos.append(sols.cells.index(c))
    return len({tuple(pt[k] for k in pos) for pt in sols.points})


def empirical_free_check(
    F: Sequence[DifferencePolynomial],
    p: int,
    i: int,
    T: Iterable[Cell],
    budget: int = DEFAULT_BUDGET,
) -> Fraction:
    """projection_count / p^|T|: equal to 1 is necessary evidence that T
    is free; below 1 over several primes is evidence against."""
    cells = sorted((int(a), int(j)) for a, j in T)
    sols = enumerate_truncated_solutions(F, p, i, budget=budget)
    return Fraction(projection_count(sols, cells), p ** len(cells))
