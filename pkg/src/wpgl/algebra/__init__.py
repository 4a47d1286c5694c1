from .counting import enumerate_monomials, global_section_count, hilbert_series
from .field import RATIONALS, Field, FieldElement, field_add, field_div, field_mul, field_sub
from .matrix import Matrix, as_matrix, determinant, identity_matrix, mat_inverse, mat_mul
from .polynomial import (
    GradedPolynomial,
    GradedRing,
    is_weighted_homogeneous,
    poly_add,
    poly_mul,
    poly_scale,
    substitute,
    weighted_degree,
)
from .signature import Variable, WeightSignature, parse_variable_name, variable_name

__all__ = [
    "RATIONALS",
    "Field",
    "FieldElement",
    "field_add",
    "field_sub",
    "field_mul",
    "field_div",
    "Matrix",
    "as_matrix",
    "determinant",
    "identity_matrix",
    "mat_inverse",
    "mat_mul",
    "GradedPolynomial",
    "GradedRing",
    "is_weighted_homogeneous",
    "poly_add",
    "poly_mul",
    "poly_scale",
    "substitute",
    "weighted_degree",
    "Variable",
    "WeightSignature",
    "parse_variable_name",
    "variable_name",
    "enumerate_monomials",
    "global_section_count",
    "hilbert_series",
]
