# Unipotent elements and the semidirect decomposition F = u o l.
#
# A unipotent element is x^i_j -> x^i_j + P^i_j with P^i_j homogeneous of
# weight m_i in coordinates of strictly lower group index. U_a is the
# subgroup where only the group-a polynomials are nonzero; its coordinates
# are the coefficients of P^a_j on the monomials of weight m_a in lower groups.

from __future__ import annotations

import logging
from dataclasses import dataclass

from wpgl.algebra.counting import enumerate_monomials
from wpgl.algebra.polynomial import GradedPolynomial, GradedRing
from wpgl.algebra.signature import WeightSignature
from wpgl.util.wpgl_types import NotUnipotentError, SignatureIndexError, SignatureMismatchError

from .endomorphism import EquivariantEndomorphism, Table, _check_table, compose, identity
from .linear import BlockLinear, linear_part

logger = logging.getLogger(__name__)


def level_basis(signature: WeightSignature, level: int) -> list[tuple[int, tuple[int, ...]]]:
    """Basis of U_a as (slot, monomial exponents) pairs, slot-major."""
    signature.check_group(level)
    monomials = enumerate_monomials(signature, signature.weight(level), below=level)
    return [(j, exps) for j in range(1, signature.multiplicity(level) + 1) for exps in monomials]


@dataclass(frozen=True)
class UnipotentElement:
    ring: GradedRing
    table: Table

    def __post_init__(self):
        table = _check_table(self.ring, self.table)
        for i, row in enumerate(table, start=1):
            for j, poly in enumerate(row, start=1):
                bad = {v for v in poly.variables() if v[0] >= i}
                if bad:
                    raise NotUnipotentError(f"P^{i}_{j} = {poly} uses coordinates {sorted(bad)} of group >= {i}")
        object.__setattr__(self, "table", table)

    @classmethod
    def identity(cls, ring: GradedRing) -> UnipotentElement:
        sig = ring.signature
        return cls(ring, tuple(tuple(ring.zero() for _ in range(r)) for r in sig.multiplicities))

    @classmethod
    def from_endomorphism(cls, f: EquivariantEndomorphism) -> UnipotentElement:
        ring = f.ring
        table = tuple(
            tuple(poly - ring.var(i, j) for j, poly in enumerate(row, start=1)) for i, row in enumerate(f.components, start=1)
        )
        try:
            return cls(ring, table)
        except NotUnipotentError as err:
            raise NotUnipotentError(f"{f} has a non-identity linear part") from err

    @classmethod
    def from_coordinates(cls, ring: GradedRing, level: int, values) -> UnipotentElement:
        """The element of U_level whose coordinates on level_basis are `values` (field elements or parameter polynomials)."""
        sig = ring.signature
        basis = level_basis(sig, level)
        values = list(values)
        if len(values) != len(basis):
            raise SignatureIndexError(f"U_{level} of {sig} has dimension {len(basis)}, got {len(values)} coordinates")
        rows = [[ring.zero() for _ in range(r)] for r in sig.multiplicities]
        pad = (0,) * len(ring.parameters)
        for (j, exps), value in zip(basis, values):
            rows[level - 1][j - 1] = rows[level - 1][j - 1] + ring.monomial(exps + pad) * value
        return cls(ring, tuple(tuple(row) for row in rows))

    @property
    def signature(self) -> WeightSignature:
        return self.ring.signature

    def polynomial(self, group: int, slot: int) -> GradedPolynomial:
        return self.table[group - 1][slot - 1]

    def as_endomorphism(self) -> EquivariantEndomorphism:
        ring = self.ring
        return EquivariantEndomorphism(
            ring, tuple(tuple(ring.var(i, j) + poly for j, poly in enumerate(row, start=1)) for i, row in enumerate(self.table, start=1))
        )

    def levels(self) -> list[int]:
        return [i for i, row in enumerate(self.table, start=1) if any(row)]

    def level(self) -> int | None:
        """The unique a with a nonzero group-a table, or None."""
        used = self.levels()
        return used[0] if len(used) == 1 else None

    def is_identity(self) -> bool:
        return not self.levels()

    def coordinate_polynomials(self, level: int) -> list[GradedPolynomial]:
        """Coefficients on level_basis as polynomials in the formal parameters only."""
        ring = self.ring
        result = []
        for j, exps in level_basis(ring.signature, level):
            terms = {(0,) * ring.nvars + e[ring.nvars :]: c for e, c in self.polynomial(level, j).terms.items() if e[: ring.nvars] == exps}
            result.append(GradedPolynomial(ring, terms))
        return result

    def coordinates(self, level: int | None = None):
        """Coefficients on level_basis; defaults to the element's own level."""
        if self.ring.parameters:
            raise SignatureMismatchError("coordinates of a symbolic element are polynomials, use coordinate_polynomials")
        level = level or self.level()
        if level is None:
            return []
        zero = (0,) * self.ring.nvars
        return [poly.coefficient(zero) for poly in self.coordinate_polynomials(level)]

    def negate(self) -> UnipotentElement:
        """Inverse inside a single U_a, where the group law is addition of tables."""
        if len(self.levels()) > 1:
            raise NotUnipotentError("negation inverts only elements of a single U_a")
        return UnipotentElement(self.ring, tuple(tuple(-poly for poly in row) for row in self.table))

    def to_json(self):
        return [[poly.to_json() for poly in row] for row in self.table]

    def __str__(self):
        return str(self.as_endomorphism())


def unipotent_inverse(u: UnipotentElement) -> UnipotentElement:
    """Solve v^i = x^i - P^i(v) group by group from the lowest weight upward."""
    ring = u.ring
    sig = ring.signature
    solved: dict = {}
    for i in range(1, sig.t + 1):
        for j in range(1, sig.multiplicity(i) + 1):
            solved[(i, j)] = ring.var(i, j) - u.polynomial(i, j).substitute(solved)
    return UnipotentElement.from_endomorphism(
        EquivariantEndomorphism(ring, tuple(tuple(solved[(i, j)] for j in range(1, sig.multiplicity(i) + 1)) for i in range(1, sig.t + 1)))
    )


def decompose(f: EquivariantEndomorphism) -> tuple[UnipotentElement, BlockLinear]:
    """F = u o l with l = linear_part(F) applied first."""
    ell = linear_part(f)
    ell_inv = ell.inverse()
    u = UnipotentElement.from_endomorphism(compose(f, ell_inv.as_automorphism(f.ring)))
    logger.debug(f"decomposed {f}: levels {u.levels()}")
    return u, ell


def invert(f: EquivariantEndomorphism) -> EquivariantEndomorphism:
    """F^-1 = l^-1 o u^-1 for F = u o l."""
    u, ell = decompose(f)
    return compose(ell.inverse().as_automorphism(f.ring), unipotent_inverse(u).as_endomorphism())


def unipotent_factorize(u: UnipotentElement) -> list[UnipotentElement]:
    """Nontrivial factors [u_2, ..., u_t], u_a in U_a, with u = u_t o ... o u_2.

    Each u_a is read off the group-a polynomials of what is left after the
    lower factors have been cancelled on the right.
    """
    ring = u.ring
    sig = ring.signature
    factors = []
    current = u
    for a in range(2, sig.t + 1):
        rows = [[ring.zero() for _ in range(r)] for r in sig.multiplicities]
        rows[a - 1] = list(current.table[a - 1])
        factor = UnipotentElement(ring, tuple(tuple(row) for row in rows))
        if factor.is_identity():
            continue
        factors.append(factor)
        current = UnipotentElement.from_endomorphism(compose(current.as_endomorphism(), factor.negate().as_endomorphism()))
    if not current.is_identity():
        raise ArithmeticError(f"factorization left a nontrivial remainder {current}")
    return factors


def compose_factors(ring: GradedRing, factors) -> EquivariantEndomorphism:
    """u_t o ... o u_2 for factors listed as [u_2, ..., u_t]."""
    result = identity(ring)
    for factor in factors:
        result = compose(factor.as_endomorphism(), result)
    return result


def conj(g: EquivariantEndomorphism, u: UnipotentElement) -> UnipotentElement:
    """g o u o g^-1."""
    if g.ring != u.ring:
        raise SignatureMismatchError(f"cannot conjugate an element of {u.ring} by a map over {g.ring}")
    return UnipotentElement.from_endomorphism(compose(compose(g, u.as_endomorphism()), invert(g)))
