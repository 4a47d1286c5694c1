# Monomial enumeration and counting in a weighted polynomial ring.
#
# enumerate_monomials: exponent vectors of a given weighted degree
# global_section_count: solutions of a_0*n_0 + ... + a_r*n_r = deg (coin change)
# hilbert_series: truncated product of 1/(1 - q^n_i), an independent oracle for the count

from __future__ import annotations

import numpy as np

from .signature import WeightSignature


def enumerate_monomials(signature: WeightSignature, weight: int, below: int | None = None, excluded_group: int | None = None) -> list[tuple[int, ...]]:
    """All coordinate exponent vectors of weighted degree exactly `weight`.

    Only variables of group index < `below` are used when `below` is given, and
    the variables of `excluded_group` are never used. Vectors are produced with
    the exponent of the earliest variable running from high to low, so for
    weights (1,2,4) at weight 4 the order is x^4, x^2*y, y^2.
    """
    if weight < 0:
        return []
    allowed = [
        k
        for k, (group, _) in enumerate(signature.variables)
        if (below is None or group < below) and group != excluded_group
    ]
    weights = signature.variable_weights
    results = []
    exps = [0] * signature.nvars

    def fill(position: int, remaining: int):
        if position == len(allowed):
            if remaining == 0:
                results.append(tuple(exps))
            return
        k = allowed[position]
        for e in range(remaining // weights[k], -1, -1):
            exps[k] = e
            fill(position + 1, remaining - e * weights[k])
        exps[k] = 0

    fill(0, weight)
    return results


def global_section_count(signature: WeightSignature, degree: int) -> int:
    """Number of non-negative integer solutions of sum a_i * n_i = degree over the raw weights."""
    if degree < 0:
        return 0
    ways = [1] + [0] * degree
    for n in signature.raw_weights:
        for total in range(n, degree + 1):
            ways[total] += ways[total - n]
    return ways[degree]


def hilbert_series(signature: WeightSignature, upto: int) -> list[int]:
    """Coefficients of q^0..q^upto in the product over raw weights of 1/(1 - q^n)."""
    if upto < 0:
        return []
    series = np.zeros(upto + 1, dtype=object)
    series[0] = 1
    for n in signature.raw_weights:
        factor = np.zeros(upto + 1, dtype=object)
        factor[::n] = 1
        series = np.convolve(series, factor)[: upto + 1]
    return [int(c) for c in series]
