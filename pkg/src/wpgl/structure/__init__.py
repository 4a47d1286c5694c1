from .endomorphism import EquivariantEndomorphism, compose, identity, is_identity, scalar, scalar_is_identity, validate
from .invariants import (
    Pi0Report,
    count_d,
    count_k,
    counting_identity_holds,
    pi0_report,
    pi1_order,
    reductive_boundary,
    splitting_matrix,
    unipotent_dimensions,
)
from .linear import BlockLinear, is_automorphism, linear_part
from .representation import ActionMatrix, torus_exponents, unipotent_action_matrix
from .sampling import random_automorphism, random_block_linear, random_unipotent
from .unipotent import UnipotentElement, compose_factors, conj, decompose, invert, level_basis, unipotent_factorize, unipotent_inverse

# automorphisms are endomorphisms whose linear blocks are invertible
EquivariantAutomorphism = EquivariantEndomorphism

__all__ = [
    "EquivariantEndomorphism",
    "EquivariantAutomorphism",
    "compose",
    "identity",
    "is_identity",
    "scalar",
    "scalar_is_identity",
    "validate",
    "Pi0Report",
    "count_d",
    "count_k",
    "counting_identity_holds",
    "pi0_report",
    "pi1_order",
    "reductive_boundary",
    "splitting_matrix",
    "unipotent_dimensions",
    "BlockLinear",
    "is_automorphism",
    "linear_part",
    "ActionMatrix",
    "torus_exponents",
    "unipotent_action_matrix",
    "random_automorphism",
    "random_block_linear",
    "random_unipotent",
    "UnipotentElement",
    "compose_factors",
    "conj",
    "decompose",
    "invert",
    "level_basis",
    "unipotent_factorize",
    "unipotent_inverse",
]
