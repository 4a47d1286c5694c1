# Invariants of the quotient of a weighted projective stack by a butterfly.
#
#   band       ker kappa            (2-gerbe band)
#   coker      E / im kappa         (the 1-stack approximation divides by this)
#   image      im rho in G0
#   middle     ker rho / im kappa   (gerbe band of the NW-SE sequence)
#
# 1-stack iff kappa injective; orbifold-type iff additionally the middle is trivial.

from __future__ import annotations

import logging
from dataclasses import dataclass

from wpgl.algebra.signature import WeightSignature
from wpgl.group.finite_group import FiniteGroup
from wpgl.util.wpgl_types import DivisibilityError

from .butterfly import Butterfly, require_valid

logger = logging.getLogger(__name__)


def _describe(group: FiniteGroup) -> dict:
    return {"order": group.order, "label": group.label()}


@dataclass
class QuotientInvariants:
    band: FiniteGroup
    coker_kappa: FiniteGroup
    image_rho: FiniteGroup
    middle: FiniteGroup
    is_one_stack: bool
    is_orbifold_type: bool

    def labels(self) -> tuple[str, str, str, str]:
        return (self.band.label(), self.coker_kappa.label(), self.image_rho.label(), self.middle.label())

    def to_json(self):
        return {
            "ker_kappa": _describe(self.band),
            "coker_kappa": _describe(self.coker_kappa),
            "im_rho": _describe(self.image_rho),
            "middle": _describe(self.middle),
            "is_1_stack": self.is_one_stack,
            "is_orbifold_type": self.is_orbifold_type,
        }


def quotient_invariants(b: Butterfly) -> QuotientInvariants:
    require_valid(b)
    e = b.center
    image_kappa = b.kappa.image()
    if not e.is_normal(image_kappa):
        raise ArithmeticError("image of kappa is not normal although the butterfly is valid")
    kernel_rho = b.rho.kernel()
    if not set(image_kappa) <= set(kernel_rho):
        raise ArithmeticError("image of kappa is not inside the kernel of rho although the butterfly is valid")

    band, _ = b.source.g1.subgroup(b.kappa.kernel())
    coker, _ = e.quotient(image_kappa)
    image, _ = b.target.g0.subgroup(b.rho.image())
    kernel_group, embedding = e.subgroup(kernel_rho)
    position = {x: k for k, x in enumerate(embedding)}
    middle, _ = kernel_group.quotient([position[x] for x in image_kappa])

    one_stack = b.kappa.is_injective()
    invariants = QuotientInvariants(band, coker, image, middle, one_stack, one_stack and middle.order == 1)
    logger.debug(f"quotient invariants: {invariants.labels()}")
    return invariants


def weight_division_quotient(signature: WeightSignature, a: int) -> WeightSignature:
    """The signature (n0/a, ..., nr/a) for a dividing gcd(n0, ..., nr)."""
    if a <= 0 or signature.d % a != 0:
        raise DivisibilityError(f"{a} does not divide gcd {signature.d} of {signature}")
    return WeightSignature(tuple(w // a for w in signature.raw_weights))
