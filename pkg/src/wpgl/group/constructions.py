# Standard finite groups and products, each returned as a FiniteGroup table.
#
# Element labels:
#   cyclic(n): k = g^k
#   direct_product(G, H), semidirect_product(N, H, action): (x, h) -> x * |H| + h
#   dihedral(n): r^k s^e -> k + n * e
#   symmetric(n): permutations of range(n) in lexicographic order (identity first)

from __future__ import annotations

from itertools import permutations

import numpy as np
from sympy.combinatorics import Permutation

from wpgl.util.wpgl_types import ActionError

from .finite_group import FiniteGroup


def from_operation(elements: list, op, name: str | None = None, generators=None) -> FiniteGroup:
    """Tabulate a group given its elements (identity first) and a binary operation."""
    index = {e: k for k, e in enumerate(elements)}
    table = [[index[op(a, b)] for b in elements] for a in elements]
    return FiniteGroup(table, generators=generators, name=name)


def trivial() -> FiniteGroup:
    return FiniteGroup([[0]], name="1")


def cyclic(n: int) -> FiniteGroup:
    idx = np.arange(n)
    return FiniteGroup((idx[:, None] + idx[None, :]) % n, generators=[1] if n > 1 else None, name=f"C{n}")


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    m = h.order
    table = g.table[:, None, :, None] * m + h.table[None, :, None, :]
    return FiniteGroup(table.reshape(g.order * m, g.order * m))


def semidirect_product(n: FiniteGroup, h: FiniteGroup, action) -> FiniteGroup:
    """N x| H with (x1, h1)(x2, h2) = (x1 * (h1 . x2), h1 h2); action[h][x] = h . x is a left action."""
    action = np.asarray(action, dtype=np.int64)
    if action.shape != (h.order, n.order):
        raise ActionError((h.order, n.order), message="action table has the wrong shape")
    m = h.order
    size = n.order * m
    table = np.zeros((size, size), dtype=np.int64)
    cols = (np.arange(n.order)[:, None] * m + np.arange(m)[None, :]).ravel()
    for x1 in n.elements:
        for h1 in h.elements:
            moved = n.table[x1, action[h1]]
            table[x1 * m + h1, cols] = (moved[:, None] * m + h.table[h1][None, :]).ravel()
    return FiniteGroup(table)


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n."""

    def op(a, b):
        (k1, e1), (k2, e2) = a, b
        return ((k1 + (-k2 if e1 else k2)) % n, (e1 + e2) % 2)

    elements = [(k, e) for e in range(2) for k in range(n)]
    return from_operation(elements, op, name=f"D{n}")


def symmetric(n: int) -> FiniteGroup:
    perms = [Permutation(list(p)) for p in permutations(range(n))]
    return from_operation(perms, lambda a, b: a * b, name=f"S{n}")


_UNITS = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def quaternion() -> FiniteGroup:
    """Q8 = {+-1, +-i, +-j, +-k}."""

    def op(a, b):
        sign, unit = _UNITS[(a[1], b[1])]
        return (a[0] * b[0] * sign, unit)

    elements = [(s, u) for u in "1ijk" for s in (1, -1)]
    return from_operation(elements, op, name="Q8")
