from .constructions import cyclic, dihedral, direct_product, from_operation, quaternion, semidirect_product, symmetric, trivial
from .crossed_module import CrossedModule, StrictMorphism, check_crossed_module, conjugation_on_image_agrees, pi0, pi1
from .extension import (
    CentralExtension,
    central_extension_from_quotient,
    enumerate_sections,
    find_homomorphic_section,
    is_split_extension,
    lift_count,
)
from .finite_group import FiniteGroup
from .homomorphism import GroupHom, RightAction, are_isomorphic, extend_homomorphism, find_isomorphism
from .report import ValidationReport, Violation

__all__ = [
    "cyclic",
    "dihedral",
    "direct_product",
    "from_operation",
    "quaternion",
    "semidirect_product",
    "symmetric",
    "trivial",
    "CrossedModule",
    "StrictMorphism",
    "check_crossed_module",
    "conjugation_on_image_agrees",
    "pi0",
    "pi1",
    "CentralExtension",
    "central_extension_from_quotient",
    "enumerate_sections",
    "find_homomorphic_section",
    "is_split_extension",
    "lift_count",
    "FiniteGroup",
    "GroupHom",
    "RightAction",
    "are_isomorphic",
    "extend_homomorphism",
    "find_isomorphism",
    "ValidationReport",
    "Violation",
]
