"""Exact square matrices over a Field, stored as tuples of row tuples of FieldElement.

Products, determinants and inverses go through sympy's DomainMatrix over QQ or GF(p).
"""

from __future__ import annotations

from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from .field import Field, FieldElement

Matrix = tuple[tuple[FieldElement, ...], ...]


def as_matrix(field: Field, rows) -> Matrix:
    return tuple(tuple(field(v) for v in row) for row in rows)


def identity_matrix(field: Field, n: int) -> Matrix:
    return tuple(tuple(field.one if i == j else field.zero for j in range(n)) for i in range(n))


def to_domain_matrix(field: Field, a: Matrix) -> DomainMatrix:
    shape = (len(a), len(a[0]) if a else 0)
    return DomainMatrix([[field.to_domain(v) for v in row] for row in a], shape, field.domain)


def from_domain_matrix(field: Field, dm: DomainMatrix) -> Matrix:
    return tuple(tuple(field.from_sympy(v) for v in row) for row in dm.to_Matrix().tolist())


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a and len(a[0]) != len(b):
        raise ValueError(f"cannot multiply {len(a)}x{len(a[0])} by {len(b)}x{len(b[0]) if b else 0}")
    if not a or not b or not b[0]:
        return tuple(() for _ in a)
    field = a[0][0].field
    return from_domain_matrix(field, to_domain_matrix(field, a) * to_domain_matrix(field, b))


def determinant(field: Field, a: Matrix) -> FieldElement:
    if not a:
        return field.one
    return field.from_sympy(field.domain.to_sympy(to_domain_matrix(field, a).det()))


def mat_inverse(field: Field, a: Matrix) -> Matrix:
    if not a:
        return ()
    try:
        inv = to_domain_matrix(field, a).inv()
    except (DMNonInvertibleMatrixError, ZeroDivisionError) as err:
        raise ZeroDivisionError("singular matrix") from err
    return from_domain_matrix(field, inv)


def matrix_to_json(a: Matrix):
    return [[v.to_json() for v in row] for row in a]
