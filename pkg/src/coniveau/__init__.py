"""Exact λ-ring computations on Grothendieck rings: Adams, γ- and divided
operations, γ- and topological filtrations as integer lattices, and checks
of their congruence and containment properties."""

from .catalog import hyperplane_embedding, load_model, product_model, projective_space
from .errors import (
    ConiveauError,
    DivisibilityError,
    InputError,
    InternalError,
    LoadError,
    TruncationError,
)
from .filtrations import filtration_member, gamma_filtration, graded_piece, top_filtration
from .lambda_ring import Free, FreeGamma, Split, augmentation, build_model, lambda_op, lambda_series
from .lattice import (
    lattice_equal,
    lattice_from_generators,
    lattice_member,
    lattice_sum,
    quotient_invariants,
)
from .operations import (
    DividedContext,
    adams_op,
    adams_op_generating,
    divided_adams,
    divided_lambda,
    gamma_op,
)
from .polynomial import Polynomial, QuotientRing, RingElement, normal_form, parse_polynomial
from .series import TruncatedSeries, series_derivative, series_inverse, series_mul, series_substitute_gamma
from .symmetric import universal_compose_poly, universal_product_poly
from .verify import Bounds, CheckReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "Bounds",
    "CheckReport",
    "ConiveauError",
    "DivisibilityError",
    "DividedContext",
    "Free",
    "FreeGamma",
    "InputError",
    "InternalError",
    "LoadError",
    "Polynomial",
    "QuotientRing",
    "RingElement",
    "Split",
    "TruncatedSeries",
    "TruncationError",
    "adams_op",
    "adams_op_generating",
    "augmentation",
    "build_model",
    "divided_adams",
    "divided_lambda",
    "filtration_member",
    "gamma_filtration",
    "gamma_op",
    "graded_piece",
    "hyperplane_embedding",
    "lambda_op",
    "lambda_series",
    "lattice_equal",
    "lattice_from_generators",
    "lattice_member",
    "lattice_sum",
    "load_model",
    "normal_form",
    "parse_polynomial",
    "product_model",
    "projective_space",
    "quotient_invariants",
    "run_suite",
    "series_derivative",
    "series_inverse",
    "series_mul",
    "series_substitute_gamma",
    "top_filtration",
    "universal_compose_poly",
    "universal_product_poly",
]
