"""Product generating functions for compositions cut out by linear inequalities."""

from .construct import (
    Construction,
    count_matrices_formula,
    enumerate_matrices,
    matrix_from_sequence,
)
from .exactmat import ConstraintMatrix, UnitMatrix, apply, is_nonnegative, nilpotent_inverse
from .gfengine import (
    gf_alpha_beta,
    gf_first_row,
    gf_integer,
    gf_lecture_hall_variant,
    gf_prepend_constraint,
    gf_rational,
    gf_special_alternating,
    gf_two_variable,
    gf_two_variable_rational,
    theta_inverse,
    theta_map,
)
from .oracle import count_bivariate, count_by_weight, verify
from .series import (
    Polynomial,
    ProductForm,
    TruncatedSeries,
    expand,
    infer_product_form,
    specialize_diagonal,
    substitute_monomial,
)
from .systems import ConstraintSystem, EqualitySpec, RationalSystem

__version__ = "0.1.0"
