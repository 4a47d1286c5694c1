from .butterfly import Butterfly, check_butterfly, require_valid
from .quotient import QuotientInvariants, quotient_invariants, weight_division_quotient
from .strict import Strictification, find_butterfly_isomorphism, from_strict_morphism, is_strictifiable

__all__ = [
    "Butterfly",
    "check_butterfly",
    "require_valid",
    "QuotientInvariants",
    "quotient_invariants",
    "weight_division_quotient",
    "Strictification",
    "find_butterfly_isomorphism",
    "from_strict_morphism",
    "is_strictifiable",
]
