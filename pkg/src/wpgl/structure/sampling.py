"""Random elements for property checks: invertible blocks, unipotent tables and their composites."""

from __future__ import annotations

import random

from wpgl.algebra.matrix import determinant
from wpgl.algebra.polynomial import GradedRing

from .endomorphism import EquivariantEndomorphism, compose
from .linear import BlockLinear
from .unipotent import UnipotentElement, level_basis


def random_block_linear(ring: GradedRing, rng: random.Random) -> BlockLinear:
    field = ring.field
    blocks = []
    for r in ring.signature.multiplicities:
        while True:
            block = tuple(tuple(field.random_element(rng) for _ in range(r)) for _ in range(r))
            if determinant(field, block):
                blocks.append(block)
                break
    return BlockLinear(ring.signature, field, tuple(blocks))


def random_unipotent(ring: GradedRing, rng: random.Random, level: int | None = None, density: float = 0.7) -> UnipotentElement:
    """Each basis coordinate of the chosen levels is nonzero with probability `density`."""
    sig = ring.signature
    levels = [level] if level is not None else range(2, sig.t + 1)
    result = UnipotentElement.identity(ring)
    for a in levels:
        values = [ring.field.random_element(rng) if rng.random() < density else 0 for _ in level_basis(sig, a)]
        if not values:
            continue
        step = UnipotentElement.from_coordinates(ring, a, values)
        result = UnipotentElement.from_endomorphism(compose(step.as_endomorphism(), result.as_endomorphism()))
    return result


def random_automorphism(ring: GradedRing, rng: random.Random) -> EquivariantEndomorphism:
    """u o l for a random unipotent u and random invertible blocks l."""
    ell = random_block_linear(ring, rng)
    u = random_unipotent(ring, rng)
    return compose(u.as_endomorphism(), ell.as_automorphism(ring))
