"""Finite involution semigroups and their HS-stable involution subsemigroups."""

from .closure import gen_inv_subsemigroup, gen_subsemigroup, omega, predicates
from .core import (
    ElementTerm,
    InvolutionSemigroup,
    Subset,
    complex_product,
    hermitian_squares,
    idempotents,
    mult,
    square_set,
    star_set,
    validate,
)
from .hs import (
    check_coset_criterion,
    check_problem,
    enumerate_hs_stable,
    genhs_formula,
    genhs_oracle,
    is_hs_simple,
    is_hs_stable,
    is_hs_stable_by_conditions,
    specialform_check,
)
from .kernels import backend

__version__ = "0.1.0"
