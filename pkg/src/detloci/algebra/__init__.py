"""Sparse polynomials over F_p, Buchberger, minors and the oracle checks built on them."""

from .cogenerated import CogeneratedSpec, cogenerated_ideal, height_check, mixed_determinantal_ideal
from .groebner import buchberger, normal_form, satisfies_buchberger_criterion
from .ideal import Ideal
from .matrices import (
    DegMatrix,
    build_block_matrix,
    build_generic_matrix,
    build_staggered_matrix,
    flag_by_column_deletion,
    maximal_minors,
)
from .ring import PolyRing, SparsePoly, format_poly, parse_poly
from .tangent import mixed_sum_dim_check, tangent_space_dim

__all__ = [
    "CogeneratedSpec", "DegMatrix", "Ideal", "PolyRing", "SparsePoly", "buchberger",
    "build_block_matrix", "build_generic_matrix", "build_staggered_matrix", "cogenerated_ideal",
    "flag_by_column_deletion", "format_poly", "height_check", "maximal_minors",
    "mixed_determinantal_ideal", "mixed_sum_dim_check", "normal_form", "parse_poly",
    "satisfies_buchberger_criterion", "tangent_space_dim",
]
