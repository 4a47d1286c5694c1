###########################################################
## wpgl_types.py
##
## defines
## - axiom identifiers used in validation reports
## - split status of a weighted projective general linear 2-group
## - exceptions raised across the library
##
###########################################################

import enum


class Axiom(str, enum.Enum):
    CM1 = "CM1"
    CM2 = "CM2"
    B0 = "B0"
    B1 = "B1"
    B2 = "B2"
    B3 = "B3"
    CENTRAL = "CENTRAL"
    EXACT = "EXACT"
    HOM = "HOM"
    ACTION = "ACTION"


AxiomDescriptions = {
    Axiom.CM1: "boundary is equivariant: d(b^a) = a^-1 d(b) a",
    Axiom.CM2: "Peiffer identity: b^d(a) = a^-1 b a",
    Axiom.B0: "diagram commutes: sigma.kappa = psi and rho.iota = phi",
    Axiom.B1: "diagonals are complexes: rho.kappa and sigma.iota are trivial",
    Axiom.B2: "NE-SW sequence is short exact",
    Axiom.B3: "iota and kappa are compatible with the actions",
    Axiom.CENTRAL: "image of the kernel group is central",
    Axiom.EXACT: "embedding injective, projection surjective, image equals kernel",
    Axiom.HOM: "map table is a group homomorphism",
    Axiom.ACTION: "action table is a right action by automorphisms",
}


class SplitStatus(str, enum.Enum):
    Split = "split"
    Unclassified = "unclassified"


class WpglError(Exception):
    """Base class of every error raised by wpgl."""


class FieldMismatchError(WpglError, ValueError):
    """Exception raised when two values over different fields are combined.

    Attributes
    ----------
    left: name of the first field
    right: name of the second field
    """

    def __init__(self, left, right, message="field mismatch") -> None:
        self.left = left
        self.right = right
        self.message = f"{message}: {left} vs {right}"
        super().__init__(self.message)


class SignatureMismatchError(WpglError, ValueError):
    """Exception raised when polynomials or maps over different graded rings are combined."""


class InvalidSignatureError(WpglError, ValueError):
    """Exception raised for a weight list that is not at least two positive integers."""


class MissingAssignmentError(WpglError, KeyError):
    """Exception raised when a substitution does not assign a variable occurring in the polynomial.

    Attributes
    ----------
    variable: the (group, slot) pair without an image
    """

    def __init__(self, variable, message="no assignment for variable") -> None:
        self.variable = variable
        self.message = f"{message} x_{variable[0]}_{variable[1]}"
        super().__init__(self.message)

    def __str__(self):
        return self.message


class NotHomogeneousError(WpglError, ValueError):
    """Exception raised when a component is not weighted homogeneous of the required weight.

    Attributes
    ----------
    group: 1-based group index of the component
    slot: 1-based slot index of the component
    weight: the required weight
    """

    def __init__(self, group: int, slot: int, weight: int, message="component is not weighted homogeneous") -> None:
        self.group = group
        self.slot = slot
        self.weight = weight
        self.message = f"{message}: F^{group}_{slot} must have weight {weight}"
        super().__init__(self.message)


class ShapeMismatchError(WpglError, ValueError):
    """Exception raised when a component table does not match the signature's groups and slots."""


class NotAnAutomorphismError(WpglError, ValueError):
    """Exception raised when an endomorphism has a singular linear block.

    Attributes
    ----------
    group: 1-based index of the first singular block
    """

    def __init__(self, group: int, message="not an automorphism") -> None:
        self.group = group
        self.message = f"{message}: linear block {group} is singular"
        super().__init__(self.message)


class NotUnipotentError(WpglError, ValueError):
    """Exception raised when an element expected in U has a non-identity linear part."""


class SignatureIndexError(WpglError, ValueError):
    """Exception raised for a group index or level outside the signature's range."""


class RepeatedWeightsError(WpglError, ValueError):
    """Exception raised when distinct weights are required but some weight repeats."""


class DivisibilityError(WpglError, ValueError):
    """Exception raised when a divisor does not divide the gcd of the weights."""


class GroupTableError(WpglError, ValueError):
    """Exception raised when a multiplication table violates the group laws.

    Attributes
    ----------
    law: which law failed (shape, identity, inverse, associativity)
    witness: element tuple exhibiting the failure
    """

    def __init__(self, law: str, witness=(), message="invalid group table") -> None:
        self.law = law
        self.witness = tuple(witness)
        self.message = f"{message}: {law} fails at {self.witness}"
        super().__init__(self.message)


class GroupTooLargeError(WpglError, ValueError):
    """Exception raised when a group exceeds the configured maximum order."""


class HomomorphismError(WpglError, ValueError):
    """Exception raised when a value table is not a group homomorphism.

    Attributes
    ----------
    witness: pair (a, b) with f(ab) != f(a)f(b), or (a,) for an out-of-range value
    """

    def __init__(self, witness=(), message="not a homomorphism") -> None:
        self.witness = tuple(witness)
        self.message = f"{message}: witness {self.witness}"
        super().__init__(self.message)


class ActionError(WpglError, ValueError):
    """Exception raised when an action table is not a right action by automorphisms."""

    def __init__(self, witness=(), message="not a right action by automorphisms") -> None:
        self.witness = tuple(witness)
        self.message = f"{message}: witness {self.witness}"
        super().__init__(self.message)


class InvalidCrossedModuleError(WpglError, ValueError):
    """Exception raised when an operation requires a valid crossed module.

    Attributes
    ----------
    report: the failing ValidationReport
    """

    def __init__(self, report, message="invalid crossed module") -> None:
        self.report = report
        self.message = message
        super().__init__(self.message)


class InvalidExtensionError(WpglError, ValueError):
    """Exception raised when an operation requires a valid central extension."""

    def __init__(self, report, message="invalid central extension") -> None:
        self.report = report
        self.message = message
        super().__init__(self.message)


class InvalidButterflyError(WpglError, ValueError):
    """Exception raised when an operation requires a valid butterfly."""

    def __init__(self, report, message="invalid butterfly") -> None:
        self.report = report
        self.message = message
        super().__init__(self.message)


class StrictMorphismError(WpglError, ValueError):
    """Exception raised when a pair of maps is not a strict morphism of crossed modules."""

    def __init__(self, reason: str, witness=(), message="not a strict morphism") -> None:
        self.reason = reason
        self.witness = tuple(witness)
        self.message = f"{message}: {reason} at {self.witness}"
        super().__init__(self.message)


class InputError(WpglError):
    """Exception raised when an input file or flag cannot be parsed."""
