# Conjugation actions on the unipotent levels, computed symbolically.
#
# unipotent_action_matrix: matrix of x -> g o x o g^-1 for a generic g in U_a on U_b,
#   entries polynomials in the coordinates of g (formal parameters of weight 0)
# torus_exponents: the character of the block-scalar torus on each basis coordinate of U

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from wpgl.algebra.field import RATIONALS, Field
from wpgl.algebra.polynomial import GradedPolynomial, GradedRing
from wpgl.algebra.signature import WeightSignature
from wpgl.util.wpgl_types import SignatureIndexError

from .linear import BlockLinear
from .unipotent import UnipotentElement, conj, level_basis

logger = logging.getLogger(__name__)


def parameter_names(prefix: str, count: int) -> tuple[str, ...]:
    if count == 1:
        return (prefix,)
    return tuple(f"{prefix}_{k}" for k in range(1, count + 1))


def basis_label(signature: WeightSignature, level: int, slot: int, exps) -> str:
    label = str(GradedRing(signature, RATIONALS).monomial(exps))
    return f"{label}@{slot}" if signature.multiplicity(level) > 1 else label


@dataclass
class ActionMatrix:
    acting_level: int
    acted_level: int
    acting: tuple
    basis: list
    entries: list

    def rendered(self) -> list[list[str]]:
        return [[str(entry) for entry in row] for row in self.entries]

    def to_json(self):
        return {
            "acting_level": self.acting_level,
            "acted_level": self.acted_level,
            "acting": list(self.acting),
            "basis": self.basis,
            "rows": self.rendered(),
        }


def _drop_parameter(poly: GradedPolynomial, index: int, names_zero: list[int]) -> GradedPolynomial:
    # terms of degree exactly one in parameter `index` and zero in the other `names_zero`, with that parameter removed
    terms = {}
    for exps, c in poly.terms.items():
        if exps[index] == 1 and all(exps[k] == 0 for k in names_zero if k != index):
            reduced = list(exps)
            reduced[index] = 0
            terms[tuple(reduced)] = c
    return GradedPolynomial(poly.ring, terms)


def unipotent_action_matrix(signature: WeightSignature, a: int, b: int, field: Field = RATIONALS) -> ActionMatrix:
    """Row o, column k: coefficient of input coordinate k in output coordinate o of g o u o g^-1."""
    if not 2 <= a < b <= signature.t:
        raise SignatureIndexError(f"need 2 <= a < b <= {signature.t}, got a={a}, b={b}")
    acting_basis = level_basis(signature, a)
    acted_basis = level_basis(signature, b)
    acting = parameter_names("a", len(acting_basis))
    acted = parameter_names("u", len(acted_basis))
    ring = GradedRing(signature, field, acting + acted)
    g = UnipotentElement.from_coordinates(ring, a, [ring.param(name) for name in acting])
    u = UnipotentElement.from_coordinates(ring, b, [ring.param(name) for name in acted])
    image = conj(g.as_endomorphism(), u)
    if image.levels() not in ([b], []):
        raise ArithmeticError(f"conjugate of U_{b} by U_{a} left U_{b}: levels {image.levels()}")
    outputs = image.coordinate_polynomials(b)
    acted_index = [ring.nvars + len(acting) + k for k in range(len(acted))]
    entries = []
    for out in outputs:
        row = [_drop_parameter(out, index, acted_index) for index in acted_index]
        recombined = ring.zero()
        for entry, name in zip(row, acted):
            recombined = recombined + entry * ring.param(name)
        if recombined != out:
            raise ArithmeticError(f"action of U_{a} on U_{b} is not linear: {out}")
        entries.append(row)
    logger.debug(f"action of U_{a} on U_{b} for {signature}: {len(entries)}x{len(acted)}")
    return ActionMatrix(a, b, acting, [basis_label(signature, b, j, exps) for j, exps in acted_basis], entries)


def _log2(value: Fraction) -> int:
    num, den = value.numerator, value.denominator
    if num > 0 and num & (num - 1) == 0 and den == 1:
        return num.bit_length() - 1
    if num == 1 and den & (den - 1) == 0:
        return -(den.bit_length() - 1)
    raise ArithmeticError(f"{value} is not a power of 2")


def torus_exponents(signature: WeightSignature) -> list[dict]:
    """For each basis coordinate of U_2..U_t, the exponent vector (e_1..e_t) of lambda_1^e_1...lambda_t^e_t.

    Each exponent is read off conj(diag(2 on block k, 1 elsewhere), basis element).
    """
    ring = GradedRing(signature, RATIONALS)
    result = []
    for a in range(2, signature.t + 1):
        basis = level_basis(signature, a)
        for position, (slot, exps) in enumerate(basis):
            one_hot = [1 if p == position else 0 for p in range(len(basis))]
            u = UnipotentElement.from_coordinates(ring, a, one_hot)
            exponents = []
            for k in range(signature.t):
                values = [2 if block == k else 1 for block in range(signature.t)]
                g = BlockLinear.block_scalar(signature, RATIONALS, values).as_automorphism(ring)
                coords = conj(g, u).coordinates(a)
                if any(c for p, c in enumerate(coords) if p != position):
                    raise ArithmeticError(f"block-scalar torus does not act diagonally on U_{a}")
                exponents.append(_log2(coords[position].value))
            result.append({"level": a, "coordinate": basis_label(signature, a, slot, exps), "exponents": exponents})
    return result
