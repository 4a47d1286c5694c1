# Linear parts of equivariant endomorphisms: one r_i x r_i block per distinct weight.
#
# Blocks act on column vectors of coordinates, so the block of F o G is the
# product of the blocks of F and G in that order.

from __future__ import annotations

from dataclasses import dataclass

from wpgl.algebra.field import Field
from wpgl.algebra.matrix import Matrix, as_matrix, determinant, identity_matrix, mat_inverse, mat_mul, matrix_to_json
from wpgl.algebra.polynomial import GradedRing
from wpgl.algebra.signature import WeightSignature
from wpgl.util.wpgl_types import NotAnAutomorphismError, ShapeMismatchError, SignatureMismatchError

from .endomorphism import EquivariantEndomorphism


@dataclass(frozen=True)
class BlockLinear:
    signature: WeightSignature
    field: Field
    blocks: tuple[Matrix, ...]

    def __post_init__(self):
        blocks = tuple(as_matrix(self.field, block) for block in self.blocks)
        if len(blocks) != self.signature.t:
            raise ShapeMismatchError(f"expected {self.signature.t} blocks, got {len(blocks)}")
        for i, block in enumerate(blocks, start=1):
            r = self.signature.multiplicity(i)
            if len(block) != r or any(len(row) != r for row in block):
                raise ShapeMismatchError(f"block {i} must be {r}x{r}")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def identity(cls, signature: WeightSignature, field: Field) -> BlockLinear:
        return cls(signature, field, tuple(identity_matrix(field, r) for r in signature.multiplicities))

    @classmethod
    def block_scalar(cls, signature: WeightSignature, field: Field, values) -> BlockLinear:
        """Block i equal to values[i] times the identity."""
        blocks = []
        for r, value in zip(signature.multiplicities, values):
            v = field(value)
            blocks.append(tuple(tuple(v if a == b else field.zero for b in range(r)) for a in range(r)))
        return cls(signature, field, tuple(blocks))

    def _check(self, other: BlockLinear):
        if self.signature != other.signature or self.field != other.field:
            raise SignatureMismatchError(f"block shapes differ: {self.signature}/{self.field} vs {other.signature}/{other.field}")

    def multiply(self, other: BlockLinear) -> BlockLinear:
        self._check(other)
        return BlockLinear(self.signature, self.field, tuple(mat_mul(a, b) for a, b in zip(self.blocks, other.blocks)))

    __mul__ = multiply

    def determinants(self):
        return [determinant(self.field, block) for block in self.blocks]

    def is_invertible(self) -> bool:
        return all(self.determinants())

    def inverse(self) -> BlockLinear:
        for i, det in enumerate(self.determinants(), start=1):
            if not det:
                raise NotAnAutomorphismError(i)
        return BlockLinear(self.signature, self.field, tuple(mat_inverse(self.field, block) for block in self.blocks))

    def is_identity(self) -> bool:
        return self == BlockLinear.identity(self.signature, self.field)

    def as_automorphism(self, ring: GradedRing | None = None) -> EquivariantEndomorphism:
        """x^i_j -> sum_k g_i[j][k] x^i_k."""
        ring = ring or GradedRing(self.signature, self.field)
        if ring.signature != self.signature or ring.field != self.field:
            raise SignatureMismatchError(f"cannot realize blocks over {ring}")
        table = []
        for i, block in enumerate(self.blocks, start=1):
            row = []
            for j in range(len(block)):
                poly = ring.zero()
                for k, c in enumerate(block[j]):
                    poly = poly + ring.var(i, k + 1).scale(c)
                row.append(poly)
            table.append(tuple(row))
        return EquivariantEndomorphism(ring, tuple(table))

    def to_json(self):
        return [matrix_to_json(block) for block in self.blocks]


def linear_part(f: EquivariantEndomorphism) -> BlockLinear:
    """Coefficients of the terms of F^i_j that are a single group-i coordinate."""
    ring = f.ring
    sig = ring.signature
    blocks = []
    for i in range(1, sig.t + 1):
        own = sig.group_variables(i)
        block = []
        for j in range(1, sig.multiplicity(i) + 1):
            row = [ring.field.zero] * len(own)
            for exps, c in f.component(i, j).terms.items():
                coords = ring.coordinate_exponents(exps)
                if sum(coords) != 1:
                    continue
                k = coords.index(1)
                variable = sig.variables[k]
                if variable[0] != i:
                    continue
                if any(exps[ring.nvars :]):
                    raise SignatureMismatchError(f"linear term of F^{i}_{j} carries formal parameters")
                row[variable[1] - 1] = c
            block.append(tuple(row))
        blocks.append(tuple(block))
    return BlockLinear(sig, ring.field, tuple(blocks))


def is_automorphism(f: EquivariantEndomorphism) -> bool:
    """True iff every linear block is invertible; the higher-order part never obstructs invertibility."""
    return linear_part(f).is_invertible()
