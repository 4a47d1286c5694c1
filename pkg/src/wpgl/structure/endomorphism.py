# Equivariant endomorphisms of weighted affine space.
#
# An endomorphism is a table F[i][j] of polynomials, one per coordinate x^i_j,
# each weighted homogeneous of the coordinate's own weight m_i. Composition is
# substitution: (F o G)^i_j = F^i_j(G).

from __future__ import annotations

import logging
from dataclasses import dataclass

from wpgl.algebra.field import FieldElement
from wpgl.algebra.polynomial import GradedPolynomial, GradedRing
from wpgl.algebra.signature import Variable, WeightSignature
from wpgl.util.wpgl_types import NotHomogeneousError, ShapeMismatchError, SignatureMismatchError

logger = logging.getLogger(__name__)

Table = tuple[tuple[GradedPolynomial, ...], ...]


def _check_table(ring: GradedRing, table) -> Table:
    sig = ring.signature
    if len(table) != sig.t:
        raise ShapeMismatchError(f"expected {sig.t} groups for {sig}, got {len(table)}")
    rows = []
    for i, row in enumerate(table, start=1):
        if len(row) != sig.multiplicity(i):
            raise ShapeMismatchError(f"group {i} of {sig} has {sig.multiplicity(i)} slots, got {len(row)}")
        checked = []
        for j, poly in enumerate(row, start=1):
            if not isinstance(poly, GradedPolynomial):
                poly = ring.constant(poly)
            if poly.ring != ring:
                raise SignatureMismatchError(f"component F^{i}_{j} lives in {poly.ring}, expected {ring}")
            if not poly.is_weighted_homogeneous(sig.weight(i)):
                raise NotHomogeneousError(i, j, sig.weight(i))
            checked.append(poly)
        rows.append(tuple(checked))
    return tuple(rows)


@dataclass(frozen=True)
class EquivariantEndomorphism:
    ring: GradedRing
    components: Table

    def __post_init__(self):
        object.__setattr__(self, "components", _check_table(self.ring, self.components))

    @property
    def signature(self) -> WeightSignature:
        return self.ring.signature

    @property
    def field(self):
        return self.ring.field

    def component(self, group: int, slot: int) -> GradedPolynomial:
        return self.components[group - 1][slot - 1]

    def assignment(self) -> dict[Variable, GradedPolynomial]:
        """The substitution x^i_j -> F^i_j."""
        return {(i, j): poly for i, row in enumerate(self.components, start=1) for j, poly in enumerate(row, start=1)}

    def __call__(self, other: EquivariantEndomorphism) -> EquivariantEndomorphism:
        return compose(self, other)

    def to_json(self):
        return {
            "signature": self.signature.to_json(),
            "field": self.field.to_json(),
            "components": [[poly.to_json() for poly in row] for row in self.components],
        }

    def __str__(self):
        return "(" + ", ".join(str(poly) for row in self.components for poly in row) + ")"


def validate(ring: GradedRing, table) -> EquivariantEndomorphism:
    """Build an endomorphism from a [group][slot] table, rejecting shape and homogeneity violations."""
    return EquivariantEndomorphism(ring, table)


def identity(ring: GradedRing) -> EquivariantEndomorphism:
    sig = ring.signature
    return EquivariantEndomorphism(ring, tuple(tuple(ring.var(i, j) for j in range(1, sig.multiplicity(i) + 1)) for i in range(1, sig.t + 1)))


def compose(f: EquivariantEndomorphism, g: EquivariantEndomorphism) -> EquivariantEndomorphism:
    """(f o g)(x) = f(g(x)); homogeneity of the result is re-verified on construction."""
    if f.ring != g.ring:
        raise SignatureMismatchError(f"cannot compose maps over {f.ring} and {g.ring}")
    images = g.assignment()
    return EquivariantEndomorphism(f.ring, tuple(tuple(poly.substitute(images) for poly in row) for row in f.components))


def scalar(ring: GradedRing, value) -> EquivariantEndomorphism:
    """The image of lambda under the G_m action: x^i_j -> lambda^{m_i} x^i_j."""
    lam = ring.field(value)
    if not lam:
        raise ZeroDivisionError("scalar(0) is not an automorphism")
    sig = ring.signature
    return EquivariantEndomorphism(
        ring,
        tuple(tuple(ring.var(i, j).scale(lam ** sig.weight(i)) for j in range(1, sig.multiplicity(i) + 1)) for i in range(1, sig.t + 1)),
    )


def is_identity(f: EquivariantEndomorphism) -> bool:
    return f == identity(f.ring)


def scalar_is_identity(ring: GradedRing, value: FieldElement) -> bool:
    return is_identity(scalar(ring, value))
