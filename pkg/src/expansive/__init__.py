"""Lex and expansive points of Hilbert schemes of Clements-Lindstrom rings."""

from .betti import (
    BettiTable,
    FieldSpec,
    Over,
    betti_ambient,
    betti_eliahou_kervaire,
    betti_quadratic_recursion,
    betti_resolution_oracle,
    bounds_report,
)
from .cl_ring import INF, CLRing
from .enumeration import (
    BudgetExceeded,
    EnumerationBudget,
    almost_lex_points,
    enumerate_points,
    strongly_stable_points,
)
from .hilbert import (
    HilbertPoly,
    InvalidPolynomial,
    gotzmann_number,
    hf,
    hilbert_polynomial,
    parse_poly,
)
from .ideal import MonomialIdeal, classify, decompose, from_generators
from .points import (
    EmptyHilbertScheme,
    check_axiom,
    exp_chain,
    exp_point,
    exp_zero_dimensional,
    hilb_nonempty,
    is_expansive,
    lex_chain,
    lex_eq_exp_case,
    lex_point,
)

__version__ = "0.1.0"
