"""Groebner engine: division, Buchberger, dimensions, elimination.

Random systems are cross-checked against sympy's groebner (an independent
implementation) after normalizing both bases to monic form.
"""

import random
from fractions import Fraction

import pytest
import sympy

from sigmadim import (
    EMPTY,
    LEX,
    DifferencePolynomial,
    SigmaMonomial,
    buchberger,
    eliminate,
    ideal_dimension,
    leading_monomial_ideal,
    monomial_krull_dim,
    reduce,
)
from sigmadim.engine import truncation_generators
from conftest import mono, poly


class TestOrder:
    def test_ranking(self):
        # y1 < y2 < s(y1): the order variable ranking of the lex order
        assert LEX.greater(mono("y2", 2), mono("y1", 2))
        assert LEX.greater(mono("s(y1)", 2), mono("y2", 2))
        assert LEX.greater(mono("y1*y2", 2), mono("y2", 2))

    def test_shift_compatible(self):
        a, b = mono("y1*y2^2", 2), mono("y2*s(y1)", 2)
        assert LEX.greater(b, a)
        assert LEX.greater(b.shifted(3), a.shifted(3))

    def test_order_respecting(self):
        assert LEX.greater(mono("s^2(y1)", 1), mono("y1^5*s(y1)^5", 1))


class TestReduce:
    def test_divisible(self):
        assert reduce(poly("y1^2", 1), [poly("y1", 1)]).is_zero

    def test_substitution(self):
        assert reduce(poly("y1*y2 + y2", 2), [poly("y1 - 1", 2)]) == poly("2*y2", 2)

    def test_no_reduction(self):
        assert reduce(poly("y2", 2), [poly("y1", 2)]) == poly("y2", 2)

    def test_idempotent(self):
        G = [poly("y1*y2 - 1", 2), poly("y2^2 - y1", 2)]
        f = poly("y1^3*y2^2 - y1*y2 + y2", 2)
        once = reduce(f, G)
        assert reduce(once, G) == once


class TestBuchberger:
    def test_monomials_already_basis(self):
        basis = buchberger([poly("y1", 2), poly("y2", 2)])
        assert set(basis.generators) == {poly("y1", 2), poly("y2", 2)}

    def test_hyperbola_line(self):
        # reduced basis eliminates y2 (the lex-largest variable); y2^2 - 1
        # is in the ideal but not a reduced-basis generator
        basis = buchberger([poly("y1*y2 - 1", 2), poly("y1 - y2", 2)])
        assert set(basis.generators) == {poly("y1^2 - 1", 2), poly("y2 - y1", 2)}
        assert reduce(poly("y2^2 - 1", 2), list(basis)).is_zero

    def test_unit_ideal(self):
        basis = buchberger([poly("y1", 1), poly("y1 - 1", 1)])
        assert basis.is_unit_ideal
        assert [str(g) for g in basis] == ["1"]

    def test_generators_reduce_to_zero(self):
        F = [poly("y1^2*y2 - 1", 2), poly("y1*y2^2 - y1", 2), poly("s(y1) - y1^2", 2)]
        basis = buchberger(F)
        for f in F:
            assert reduce(f, list(basis)).is_zero

    def test_spolys_reduce_to_zero(self):
        from sigmadim import s_polynomial

        F = [poly("y1*y2 - y2", 2), poly("y2^2 - y1", 2)]
        basis = list(buchberger(F))
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                assert reduce(s_polynomial(basis[i], basis[j]), basis).is_zero


class TestLeadingMonomials:
    def test_single(self):
        basis = buchberger([poly("y1*y2 - 1", 2)])
        assert leading_monomial_ideal(basis) == [mono("y1*y2", 2)]

    def test_unit(self):
        basis = buchberger([poly("y1", 1), poly("y1 - 1", 1)])
        assert leading_monomial_ideal(basis) == [SigmaMonomial()]

    def test_truncated_shift_system(self):
        gens = truncation_generators(
            [poly("s(y1) - y1 - 1", 2), poly("y1*y2 - 1", 2)], 1
        )
        lms = set(leading_monomial_ideal(buchberger(gens)))
        assert mono("s(y1)", 2) in lms
        assert mono("y1*y2", 2) in lms


class TestIdealDimension:
    def test_hyperbola(self):
        assert ideal_dimension([poly("y1*y2 - 1", 2)], [(0, 1), (0, 2)]) == 1

    def test_zero_ideal(self):
        assert ideal_dimension([], [(0, 1), (0, 2), (1, 1)]) == 3

    def test_unit_ideal(self):
        assert ideal_dimension([poly("y1", 1), poly("y1 - 1", 1)], [(0, 1)]) is EMPTY

    def test_matches_lm_generators(self):
        F = [poly("y1*y2 - 1", 2), poly("y2^2 - y1", 2), poly("s(y1) - y1*y2", 2)]
        variables = [(0, 1), (0, 2), (1, 1), (1, 2)]
        basis = buchberger(F, variables)
        lm_polys = [
            DifferencePolynomial.from_monomial(m, 2) for m in leading_monomial_ideal(basis)
        ]
        assert ideal_dimension(F, variables) == ideal_dimension(lm_polys, variables)

    def test_principal_monomial_matches_krull(self):
        m = mono("y1*s(y2)^2", 2)
        variables = [(0, 1), (0, 2), (1, 1), (1, 2)]
        f = DifferencePolynomial.from_monomial(m, 2)
        assert ideal_dimension([f], variables) == monomial_krull_dim(
            [m.support()], len(variables)
        )


class TestEliminate:
    def test_no_relation(self):
        assert eliminate([poly("y1 - y2", 2)], [(0, 1), (0, 2)], [(0, 2)]) == []

    def test_hyperbola_projection(self):
        got = eliminate(
            [poly("y1*y2 - 1", 2), poly("y1 - y2", 2)], [(0, 1), (0, 2)], [(0, 2)]
        )
        assert got == [poly("y2^2 - 1", 2)]

    def test_already_inside(self):
        f = poly("s(y1) - y1 - 1", 1)
        assert eliminate([f], [(0, 1), (1, 1)], [(0, 1), (1, 1)]) == [f]

    def test_keep_outside_vars_rejected(self):
        with pytest.raises(ValueError):
            eliminate([poly("y1", 1)], [(0, 1)], [(5, 1)])

    def test_eliminated_generators_lie_in_ideal(self):
        rng = random.Random(5)
        F = [poly("y1*y2 - 1", 2), poly("s(y2) - y1^2", 2)]
        variables = sorted(frozenset().union(*(f.support_vars() for f in F)))
        keep = [(0, 2), (1, 2)]
        got = eliminate(F, variables, keep)
        assert got, "projection of a curve to two coordinates has a relation"
        basis = list(buchberger(F))
        for g in got:
            assert g.support_vars() <= set(keep)
            assert reduce(g, basis).is_zero
        # random elements of the eliminated ideal lie in (F)
        for _ in range(5):
            combo = DifferencePolynomial.zero(2)
            for g in got:
                factor = DifferencePolynomial(
                    {SigmaMonomial({(0, 2): rng.randint(0, 2)}): Fraction(rng.randint(-2, 2))},
                    2,
                )
                combo = combo + factor * g
            assert reduce(combo, basis).is_zero


# -- cross-check against sympy ----------------------------------------------


def _to_sympy(polys):
    variables = sorted({v for f in polys for v in f.support_vars()})
    syms = {v: sympy.Symbol(f"x_{v.shift}_{v.index}") for v in variables}
    gens = [syms[v] for v in sorted(variables, reverse=True)]
    exprs = []
    for f in polys:
        expr = sympy.Integer(0)
        for m, c in f.terms.items():
            t = sympy.Rational(c.numerator, c.denominator)
            for v, e in m.exps:
                t *= syms[v] ** e
            expr += t
        exprs.append(expr)
    return exprs, gens


def _monic_strings(exprs, gens):
    out = []
    for e in exprs:
        p = sympy.Poly(e, *gens)
        out.append(str(sympy.expand((p / p.LC("lex")).as_expr())))
    return sorted(out)


def _random_system(rng):
    n = rng.choice([1, 2])
    polys = []
    for _ in range(rng.randint(1, 3)):
        terms = {}
        for _ in range(rng.randint(1, 3)):
            m = {}
            for _ in range(rng.randint(0, 3)):
                var = (rng.randint(0, 2), rng.randint(1, n))
                m[var] = m.get(var, 0) + rng.randint(1, 2)
            monomial = SigmaMonomial(m)
            terms[monomial] = terms.get(monomial, Fraction(0)) + Fraction(rng.randint(-3, 3))
        f = DifferencePolynomial(terms, n)
        if not f.is_zero and not f.is_constant():
            polys.append(f)
    return polys


def test_matches_sympy_on_random_systems():
    rng = random.Random(7)
    checked = 0
    while checked < 25:
        polys = _random_system(rng)
        if not polys:
            continue
        exprs, gens = _to_sympy(polys)
        expected = _monic_strings(list(sympy.groebner(exprs, *gens, order="lex").exprs), gens)
        ours_exprs, _ = _to_sympy(list(buchberger(polys)))
        assert _monic_strings(ours_exprs, gens) == expected
        checked += 1


def test_matches_sympy_on_intro_truncation():
    F = [poly("y1*s(y1)", 2), poly("y1*y2 - y2*s(y2)", 2)]
    gens_list = truncation_generators(F, 4)
    exprs, gens = _to_sympy(gens_list)
    expected = _monic_strings(list(sympy.groebner(exprs, *gens, order="lex").exprs), gens)
    ours_exprs, _ = _to_sympy(list(buchberger(gens_list)))
    assert _monic_strings(ours_exprs, gens) == expected
