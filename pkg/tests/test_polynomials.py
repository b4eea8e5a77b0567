"""Ring arithmetic, shift action, sigma-degrees, homogenization."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sigmadim import (
    DifferencePolynomial,
    SigmaDegree,
    SigmaMonomial,
    SigmaVariable,
    homogenize,
    is_sigma_homogeneous,
    shift,
    sigma_degree,
)
from conftest import mono, poly


class TestArithmetic:
    def test_additive_inverse(self):
        f = poly("y1", 1)
        assert (f + (-f)).is_zero

    def test_difference_of_squares(self):
        assert poly("y1 + 1", 1) * poly("y1 - 1", 1) == poly("y1^2 - 1", 1)

    def test_exponent_addition(self):
        assert poly("y1*s(y1)", 1) * poly("s(y1)", 1) == poly("y1*s(y1)^2", 1)

    def test_mismatched_rings_rejected(self):
        with pytest.raises(ValueError):
            poly("y1", 1) + poly("y1", 2)

    def test_coefficients_exact(self):
        f = poly("1/3*y1", 1)
        assert (f + f + f) == poly("y1", 1)

    def test_zero_knows_its_ring(self):
        assert DifferencePolynomial.zero(3).num_vars == 3


class TestShift:
    def test_basic(self):
        assert shift(poly("y1*s(y1)", 1), 1) == poly("s(y1)*s^2(y1)", 1)

    def test_identity(self):
        f = poly("y1*y2 - 3", 2)
        assert shift(f, 0) == f

    def test_constants_fixed(self):
        assert shift(poly("y1*y2 - 1", 2), 2) == poly("s^2(y1)*s^2(y2) - 1", 2)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            shift(poly("y1", 1), -1)


class TestSigmaDegree:
    def test_mixed(self):
        assert sigma_degree(mono("y1^2*s(y2)", 2)) == SigmaDegree({0: 2, 1: 1})

    def test_constant(self):
        assert sigma_degree(SigmaMonomial()) == SigmaDegree()

    def test_spread(self):
        assert sigma_degree(mono("y1*y2*s^3(y1)^3", 2)) == SigmaDegree({0: 2, 3: 3})


class TestHomogenize:
    def test_product_minus_one(self):
        assert homogenize(poly("y1*s(y1) - 1", 1)) == DifferencePolynomial(
            {
                mono("y1*s(y1)", 1): Fraction(1),
                SigmaMonomial({SigmaVariable(0, 0): 1, SigmaVariable(1, 0): 1}): Fraction(-1),
            },
            1,
        )

    def test_already_homogeneous(self):
        f = poly("y1", 1)
        assert homogenize(f) == f

    def test_degree_two_block(self):
        assert homogenize(poly("y1*y2 - 1", 2)) == DifferencePolynomial(
            {
                mono("y1*y2", 2): Fraction(1),
                SigmaMonomial({SigmaVariable(0, 0): 2}): Fraction(-1),
            },
            2,
        )

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            homogenize(DifferencePolynomial.zero(1))

    def test_substituting_one_recovers(self):
        f = poly("y1^2*s(y1) - 2*y1 + 5", 1)
        h = homogenize(f)
        recovered = {}
        for m, c in h.terms.items():
            stripped = SigmaMonomial((v, e) for v, e in m.exps if v.index != 0)
            recovered[stripped] = recovered.get(stripped, Fraction(0)) + c
        assert DifferencePolynomial(recovered, 1) == f


# -- property tests ---------------------------------------------------------

variables = st.tuples(st.integers(0, 3), st.integers(1, 2))
monomials = st.dictionaries(variables, st.integers(1, 3), max_size=3).map(SigmaMonomial)
coeffs = st.fractions(min_value=-4, max_value=4).filter(lambda c: c != 0)


@st.composite
def polynomials(draw, allow_zero=True):
    terms = draw(st.dictionaries(monomials, coeffs, min_size=0 if allow_zero else 1, max_size=4))
    return DifferencePolynomial(terms, 2)


@given(polynomials(), st.integers(0, 3), st.integers(0, 3))
def test_shift_composes(f, a, b):
    assert shift(shift(f, a), b) == shift(f, a + b)


@given(polynomials(), polynomials(), st.integers(0, 3))
def test_shift_is_ring_morphism(f, g, ell):
    assert shift(f * g, ell) == shift(f, ell) * shift(g, ell)
    assert shift(f + g, ell) == shift(f, ell) + shift(g, ell)


@given(polynomials(), st.integers(1, 3))
def test_shift_raises_order(f, ell):
    if f.order() is not None:
        assert shift(f, ell).order() == f.order() + ell


@given(monomials, monomials)
def test_sigma_degree_additive(m1, m2):
    assert sigma_degree(m1 * m2) == sigma_degree(m1) + sigma_degree(m2)


@settings(max_examples=60)
@given(polynomials(allow_zero=False))
def test_homogenize_output_homogeneous(f):
    assert is_sigma_homogeneous(homogenize(f))
