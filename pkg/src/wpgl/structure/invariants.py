# Numerical invariants of PGL(n0,...,nr).
#
# count_k / count_d: dimensions of the unipotent levels and their monomial partition
# pi1_order: gcd of the weights
# pi0_report: the structural summary of the component group
# splitting_matrix: unimodular completion of the primitive weight vector

from __future__ import annotations

import logging
import math
from dataclasses import asdict, dataclass

from sympy import Matrix, diag, eye
from sympy.core.intfunc import igcdex

from wpgl.algebra.counting import enumerate_monomials
from wpgl.algebra.field import Field
from wpgl.algebra.signature import WeightSignature
from wpgl.util.wpgl_types import RepeatedWeightsError, SignatureIndexError, SplitStatus

from .linear import BlockLinear

logger = logging.getLogger(__name__)


def count_k(signature: WeightSignature, a: int) -> int:
    """Monomials of weight m_a in coordinates of group index < a; k_1 = 0."""
    return len(enumerate_monomials(signature, signature.weight(a), below=a))


def count_d(signature: WeightSignature, a: int, b: int, l: int) -> int:
    """Monomials of weight m_b - l*m_a in coordinates of group index < b other than group a."""
    if not 1 <= a < b <= signature.t:
        raise SignatureIndexError(f"need 1 <= a < b <= {signature.t}, got a={a}, b={b}")
    if not 0 <= l <= signature.weight(b) // signature.weight(a):
        raise SignatureIndexError(f"l={l} outside 0..{signature.weight(b) // signature.weight(a)}")
    return len(enumerate_monomials(signature, signature.weight(b) - l * signature.weight(a), below=b, excluded_group=a))


def counting_identity_holds(signature: WeightSignature, a: int, b: int) -> bool:
    """k_b equals sum_l d_l * C(l + r_a - 1, r_a - 1)."""
    r_a = signature.multiplicity(a)
    total = sum(count_d(signature, a, b, l) * math.comb(l + r_a - 1, r_a - 1) for l in range(signature.weight(b) // signature.weight(a) + 1))
    return total == count_k(signature, b)


def pi1_order(signature: WeightSignature) -> int:
    return signature.d


def unipotent_dimensions(signature: WeightSignature) -> list[int]:
    return [signature.multiplicity(a) * count_k(signature, a) for a in range(1, signature.t + 1)]


def reductive_boundary(signature: WeightSignature, field: Field, value) -> BlockLinear:
    """The image of lambda in GL(r_1) x ... x GL(r_t): lambda^{m_i} on block i."""
    lam = field(value)
    if not lam:
        raise ZeroDivisionError("the boundary is defined on nonzero scalars only")
    return BlockLinear.block_scalar(signature, field, [lam**m for m in signature.weights])


def splitting_matrix(weights) -> list[list[int]]:
    """Integer matrix of determinant 1 whose first column is weights / gcd(weights)."""
    weights = [int(w) for w in weights]
    if len(set(weights)) != len(weights):
        raise RepeatedWeightsError(f"splitting matrix needs distinct weights, got {weights}")
    if not weights or any(w <= 0 for w in weights):
        raise ValueError(f"weights must be positive, got {weights}")
    g = math.gcd(*weights)
    completion = _complete([w // g for w in weights])
    det = completion.det()
    if det != 1:
        raise ArithmeticError(f"completion of {weights} has determinant {det}")
    return [[int(v) for v in row] for row in completion.tolist()]


def _complete(vector: list[int]) -> Matrix:
    # M = diag(M', 1) * B, where M' completes the first n-1 entries divided by
    # their gcd g and B is the identity with [[g, alpha], [v_n, beta]] on coordinates (1, n)
    n = len(vector)
    if n == 1:
        return eye(1)
    head, last = vector[:-1], vector[-1]
    g = math.gcd(*head)
    x, _, _ = igcdex(g, last)
    beta = int(x) % last
    alpha = (g * beta - 1) // last
    b = eye(n)
    b[0, 0], b[0, n - 1], b[n - 1, 0], b[n - 1, n - 1] = g, alpha, last, beta
    return diag(_complete([v // g for v in head]), 1) * b


@dataclass
class Pi0Report:
    signature: list
    k: list
    unipotent_dimensions: list
    ranks: list
    pi1_order: int
    split: SplitStatus
    reductive: str
    pi0_shape: str
    splitting_matrix: list | None = None
    tag: str | None = None
    cokernel_map: list | None = None

    def to_json(self):
        data = asdict(self)
        data["split"] = self.split.value
        return data


def _reductive_description(signature: WeightSignature) -> str:
    return " x ".join("Gm" if r == 1 else f"GL({r})" for r in signature.multiplicities)


def _pi0_shape(signature: WeightSignature, dims: list[int]) -> str:
    t = signature.t
    if t == 1:
        return f"PGL({signature.multiplicity(1)})"
    if any(r > 1 for r in signature.multiplicities):
        return "cokernel of Gm -> " + _reductive_description(signature) + ", unipotent part of dimension " + str(sum(dims))
    torus = "Gm" if t == 2 else f"Gm^{t - 1}"
    total = sum(dims)
    if total == 0:
        return torus
    if t == 2:
        unipotent = "A" if total == 1 else f"A^{total}"
    else:
        unipotent = "U"
    return f"{unipotent} x| {torus}"


def pi0_report(signature: WeightSignature) -> Pi0Report:
    dims = unipotent_dimensions(signature)
    all_simple = all(r == 1 for r in signature.multiplicities)
    report = Pi0Report(
        signature=signature.to_json(),
        k=[count_k(signature, a) for a in range(1, signature.t + 1)],
        unipotent_dimensions=dims,
        ranks=list(signature.multiplicities),
        pi1_order=pi1_order(signature),
        split=SplitStatus.Split if all_simple else SplitStatus.Unclassified,
        reductive=_reductive_description(signature),
        pi0_shape=_pi0_shape(signature, dims),
    )
    if all_simple:
        report.splitting_matrix = splitting_matrix(signature.weights)
    if signature.t == 1:
        report.tag = f"PGL({signature.multiplicity(1)})"
    elif not all_simple:
        report.cokernel_map = [[m, r] for m, r in zip(signature.weights, signature.multiplicities)]
    logger.debug(f"pi0 report for {signature}: dims {dims}, {report.split.value}")
    return report
