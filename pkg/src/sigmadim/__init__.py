"""Exact sigma-dimension of systems of algebraic difference equations.

Exact values for monomial sigma-ideals and univariate sigma-monomials
(covering density), convergent upper bounds for general systems
(truncated Groebner dimension sequences), plus the supporting machinery:
free-set tests, minimum hitting sets, a coverage automaton with exact
minimum-mean-cycle search, and a finite-field solution oracle.
"""

from .covering import IntSet, PeriodicComplement, covering_density, optimal_complement, reflect, tau_interval
from .engine import (
    CapExceededError,
    DimensionReport,
    DimEntry,
    LinearTail,
    detect_eventual_linear,
    monomialize,
    not_free_certificate,
    sigma_dim,
    sigma_dim_family,
    sigma_dim_univariate_monomial,
    truncated_dim_sequence,
)
from .families import (
    EMPTY,
    EmptyDimension,
    SigmaFamily,
    SupportSet,
    UnitIdealError,
    family_from_monomials,
    is_free,
    max_free_subset,
    monomial_krull_dim,
    tau_family,
    window_dim,
)
from .groebner import (
    LEX,
    GroebnerBasis,
    MonomialOrder,
    buchberger,
    eliminate,
    elimination_order,
    ideal_dimension,
    leading_monomial_ideal,
    reduce,
    s_polynomial,
)
from .lab import (
    BudgetExceededError,
    TruncatedSolutionSet,
    empirical_free_check,
    enumerate_truncated_solutions,
    projection_count,
)
from .parsing import ParseError, parse_polynomial, polynomial_text
from .polynomials import (
    DifferencePolynomial,
    SigmaDegree,
    SigmaMonomial,
    SigmaVariable,
    homogenize,
    is_sigma_homogeneous,
    shift,
    sigma_degree,
)

__version__ = "0.1.0"
