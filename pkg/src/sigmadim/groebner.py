"""Buchberger's algorithm over the fixed shift-compatible lex order.

The only monomial order used anywhere is lex with the variable ranking
s^i(y_j) ordered by (i, j), lowest first:

    y1 < y2 < ... < yn < s(y1) < ... < s(yn) < s^2(y1) < ...

This order is a multiplicative well-order, is compatible with the shift
(m1 <= m2 implies shift(m1) <= shift(m2)) and respects polynomial order
(ord(m1) < ord(m2) implies m1 < m2), which is what makes leading-monomial
ideals of shift-stable ideals shift-stable again.  Elimination uses the
variant ranking the eliminated variables above all kept ones.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .families import EMPTY, EmptyDimension, monomial_krull_dim
from .polynomials import DifferencePolynomial, SigmaMonomial, SigmaVariable


class MonomialOrder:
    """Lex order determined by a variable ranking function.

    `rank` maps a SigmaVariable to a sortable key; larger key = larger
    variable.  The default ranking is the identity (shift, index)."""

    def __init__(self, rank: Callable[[SigmaVariable], tuple] | None = None, name: str = "lex"):
        self._rank = rank or (lambda v: v)
        self.name = name

    def key(self, m: SigmaMonomial):
        """Sort key: exponents listed from the highest-ranked variable down.

        Comparing these tuples lexicographically is the lex comparison of
        sparse exponent vectors."""
        return tuple(sorted(((self._rank(v), e) for v, e in m.exps), reverse=True))

    def greater(self, a: SigmaMonomial, b: SigmaMonomial) -> bool:
        return self.key(a) > self.key(b)

    def leading(self, f: DifferencePolynomial) -> tuple[SigmaMonomial, Fraction]:
        if f.is_zero:
            raise ValueError("zero polynomial has no leading term")
        m = max(f.terms, key=self.key)
        return m, f.terms[m]

    def sorted_terms(self, f: DifferencePolynomial) -> list[tuple[SigmaMonomial, Fraction]]:
        return sorted(f.terms.items(), key=lambda t: self.key(t[0]), reverse=True)


LEX = MonomialOrder()


def elimination_order(eliminate_vars: Iterable[SigmaVariable]) -> MonomialOrder:
    """Lex order ranking the given variables above every other variable."""
    elim = frozenset(SigmaVariable(*v) for v in eliminate_vars)
    return MonomialOrder(
        rank=lambda v: (1 if v in elim else 0, v.shift, v.index),
        name="lex-eliminating",
    )


class GroebnerBasis:
    """Reduced Groebner basis: monic generators, no leading monomial
    divides another, every tail reduced."""

    __slots__ = ("generators", "variables", "order")

    def __init__(
        self,
        generators: Sequence[DifferencePolynomial],
        variables: frozenset[SigmaVariable],
        order: MonomialOrder,
    ):
        self.generators = tuple(generators)
        self.variables = variables
        self.order = order

    @property
    def is_unit_ideal(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_constant() and not self.generators[0].is_zero

    def __iter__(self):
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __repr__(self) -> str:
        return f"GroebnerBasis({[str(g) for g in self.generators]})"


def reduce(
    f: DifferencePolynomial,
    G: Sequence[DifferencePolynomial],
    order: MonomialOrder = LEX,
) -> DifferencePolynomial:
    """Full normal form of f modulo G: no monomial of the remainder is
    divisible by any leading monomial of G, and f - remainder lies in (G)."""
    divisors = [(g, *order.leading(g)) for g in G if not g.is_zero]
    remainder: dict[SigmaMonomial, Fraction] = {}
    work = f
    while not work.is_zero:
        m, c = order.leading(work)
        hit = next(((g, lm, lc) for g, lm, lc in divisors if lm.divides(m)), None)
        if hit is None:
            remainder[m] = remainder.get(m, Fraction(0)) + c
            work = work - DifferencePolynomial({m: c}, f.num_vars)
        else:
            g, lm, lc = hit
            factor = DifferencePolynomial({m / lm: c / lc}, f.num_vars)
            work = work - factor * g
    return DifferencePolynomial(remainder, f.num_vars)


def s_polynomial(
    f: DifferencePolynomial, g: DifferencePolynomial, order: MonomialOrder = LEX
) -> DifferencePolynomial:
    mf, cf = order.leading(f)
    mg, cg = order.leading(g)
    lcm = mf.lcm(mg)
    uf = DifferencePolynomial({lcm / mf: Fraction(1) / cf}, f.num_vars)
    ug = DifferencePolynomial({lcm / mg: Fraction(1) / cg}, g.num_vars)
    return uf * f - ug * g


def _monic(f: DifferencePolynomial, order: MonomialOrder) -> DifferencePolynomial:
    _, c = order.leading(f)
    return f.scale(Fraction(1) / c)


def buchberger(
    F: Sequence[DifferencePolynomial],
    variables: Iterable[SigmaVariable] | None = None,
    order: MonomialOrder = LEX,
) -> GroebnerBasis:
    """Reduced Groebner basis of (F).

    Pair processing uses the product (coprimality) criterion and
    Buchberger's chain criterion; every intermediate result is normalized
    to monic to control coefficient growth.  The unit ideal yields the
    basis [1]; the zero ideal yields []."""
    polys = [f for f in F if not f.is_zero]
    if variables is not None:
        variables = frozenset(SigmaVariable(*v) for v in variables)
        for f in polys:
            extra = f.support_vars() - variables
            if extra:
                raise ValueError(f"polynomial uses variables outside the ring: {sorted(extra)}")
    else:
        variables = frozenset().union(*(f.support_vars() for f in polys)) if polys else frozenset()

    num_vars = F[0].num_vars if F else 0
    G: list[DifferencePolynomial] = []
    lms: list[SigmaMonomial] = []
    for f in sorted(polys, key=lambda f: order.key(order.leading(f)[0])):
        r = reduce(f, G, order)
        if not r.is_zero:
            G.append(_monic(r, order))
            lms.append(order.leading(G[-1])[0])

    pairs = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))}
    done: set[tuple[int, int]] = set()

    def chain_skippable(i: int, j: int) -> bool:
        lcm = lms[i].lcm(lms[j])
        for k in range(len(G)):
            if k in (i, j) or not lms[k].divides(lcm):
                continue
            a, b = (min(i, k), max(i, k)), (min(j, k), max(j, k))
            if a in done and b in done:
                return True
        return False

    while pairs:
        i, j = min(pairs, key=lambda p: (order.key(lms[p[0]].lcm(lms[p[1]])), p))
        pairs.discard((i, j))
        done.add((i, j))
        if lms[i].is_coprime(lms[j]) or chain_skippable(i, j):
            continue
        r = reduce(s_polynomial(G[i], G[j], order), G, order)
        if r.is_zero:
            continue
        G.append(_monic(r, order))
        lms.append(order.leading(G[-1])[0])
        k = len(G) - 1
        pairs |= {(t, k) for t in range(k)}

    # minimalize: drop generators whose lm is divisible by another lm
    # (no two lms are equal: every added lm is irreducible mod the others)
    minimal = [
        G[i]
        for i in range(len(G))
        if not any(j != i and lms[j].divides(lms[i]) for j in range(len(G)))
    ]
    # detect the unit ideal
    if any(g.is_constant() for g in minimal):
        one = DifferencePolynomial.constant(1, num_vars)
        return GroebnerBasis([one], variables, order)
    # tail-reduce each generator against the others
    reduced: list[DifferencePolynomial] = []
    for i, g in enumerate(minimal):
        others = [minimal[j] for j in range(len(minimal)) if j != i]
        reduced.append(_monic(reduce(g, others, order), order))
    reduced.sort(key=lambda g: order.key(order.leading(g)[0]))
    return GroebnerBasis(reduced, variables, order)


def leading_monomial_ideal(G: GroebnerBasis) -> list[SigmaMonomial]:
    """Leading monomials of the reduced basis: the minimal generators of
    lm((G)) over the ambient variable set."""
    return [G.order.leading(g)[0] for g in G.generators]


def ideal_dimension(
    F: Sequence[DifferencePolynomial],
    variables: Iterable[SigmaVariable],
) -> int | EmptyDimension:
    """Krull dimension of k[variables]/(F), via the leading-monomial ideal:
    |variables| minus a minimum hitting set of the squarefree lm supports.
    EMPTY for the unit ideal (zero ring)."""
    variables = frozenset(SigmaVariable(*v) for v in variables)
    basis = buchberger(F, variables, LEX)
    if basis.is_unit_ideal:
        return EMPTY
    supports = [m.support() for m in leading_monomial_ideal(basis)]
    return monomial_krull_dim(supports, len(variables))


def eliminate(
    F: Sequence[DifferencePolynomial],
    variables: Iterable[SigmaVariable],
    keep: Iterable[SigmaVariable],
) -> list[DifferencePolynomial]:
    """Generators of (F) intersected with the subring on `keep`, computed
    from a Groebner basis for the lex order ranking the complement of
    `keep` above `keep`."""
    variables = frozenset(SigmaVariable(*v) for v in variables)
    keep = frozenset(SigmaVariable(*v) for v in keep)
    if not keep <= variables:
        raise ValueError("keep must be a subset of the ambient variables")
    order = elimination_order(variables - keep)
    basis = buchberger(F, variables, order)
    kept = [g for g in basis if g.support_vars() <= keep]
    kept.sort(key=lambda g: LEX.key(LEX.leading(g)[0]) if not g.is_zero else ())
    return kept
