# Finite groups as multiplication tables.
#
# Elements are 0..n-1 with 0 the identity; table[a, b] = ab.
# Group laws are verified on construction with numpy fancy indexing:
#   table[table][a, b, c] = (ab)c and table[:, table][a, b, c] = a(bc)

from __future__ import annotations

import logging
from functools import cached_property

import numpy as np
from sympy import factorint

from wpgl.util.config import max_group_order
from wpgl.util.wpgl_types import GroupTableError, GroupTooLargeError

logger = logging.getLogger(__name__)


def _first(mask) -> tuple:
    return tuple(int(v) for v in np.argwhere(mask)[0])


class FiniteGroup:
    def __init__(self, table, generators=None, name: str | None = None):
        table = np.array(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise GroupTableError("shape", table.shape)
        n = table.shape[0]
        limit = max_group_order()
        if n > limit:
            raise GroupTooLargeError(f"group of order {n} exceeds WPGL_MAX_GROUP_ORDER={limit}")
        if table.min() < 0 or table.max() >= n:
            raise GroupTableError("closure", _first((table < 0) | (table >= n)))
        elements = np.arange(n)
        if not (np.array_equal(table[0], elements) and np.array_equal(table[:, 0], elements)):
            raise GroupTableError("identity", (0,))
        has_inverse = (table == 0).any(axis=1)
        if not has_inverse.all():
            raise GroupTableError("inverse", _first(~has_inverse))
        assoc = table[table] != table[:, table]
        if assoc.any():
            raise GroupTableError("associativity", _first(assoc))
        self.table = table
        self.table.setflags(write=False)
        self.inverses = np.argmax(table == 0, axis=1)
        self.inverses.setflags(write=False)
        self.name = name
        # only generators passed in are part of the file format
        self.given_generators = None if generators is None else tuple(int(g) for g in generators)
        if self.given_generators is not None and len(self.generated(self.given_generators)) != n:
            raise GroupTableError("generators", self.given_generators)

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    def __len__(self):
        return self.order

    @property
    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def conjugate(self, a: int, x: int) -> int:
        """x^-1 a x."""
        return self.mul(self.inv(x), self.mul(a, x))

    def power(self, a: int, k: int) -> int:
        result = 0
        base = a if k >= 0 else self.inv(a)
        for _ in range(abs(k)):
            result = self.mul(result, base)
        return result

    @cached_property
    def element_orders(self) -> list[int]:
        orders = []
        for a in self.elements:
            k, x = 1, a
            while x != 0:
                x = self.mul(x, a)
                k += 1
            orders.append(k)
        return orders

    def element_order(self, a: int) -> int:
        return self.element_orders[a]

    def generated(self, subset) -> list[int]:
        """Sorted elements of the subgroup generated by `subset`."""
        span = {0}
        frontier = [0]
        gens = [int(g) for g in subset]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.mul(x, g)
                if y not in span:
                    span.add(y)
                    frontier.append(y)
        return sorted(span)

    @cached_property
    def generators(self) -> tuple[int, ...]:
        if self.given_generators is not None:
            return self.given_generators
        gens = []
        span = {0}
        for a in self.elements:
            if a not in span:
                gens.append(a)
                span = set(self.generated(gens))
        return tuple(gens)

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def is_subgroup(self, subset) -> bool:
        subset = sorted(set(int(s) for s in subset))
        return bool(subset) and self.generated(subset) == subset

    def is_normal(self, subset) -> bool:
        members = set(int(s) for s in subset)
        return self.is_subgroup(members) and all(self.conjugate(a, x) in members for a in members for x in self.elements)

    def center(self) -> list[int]:
        commutes = (self.table == self.table.T).all(axis=1)
        return [int(a) for a in np.flatnonzero(commutes)]

    def is_central(self, subset) -> bool:
        centre = set(self.center())
        return all(int(a) in centre for a in subset)

    def subgroup(self, subset) -> tuple[FiniteGroup, list[int]]:
        """The subgroup on `subset` relabelled in increasing order, with its embedding."""
        members = sorted(set(int(s) for s in subset))
        if self.generated(members) != members:
            raise GroupTableError("subgroup closure", tuple(members))
        index = {a: k for k, a in enumerate(members)}
        table = [[index[self.mul(a, b)] for b in members] for a in members]
        return FiniteGroup(table), members

    def cosets(self, normal) -> list[list[int]]:
        """Right cosets Na ordered by their minimal element."""
        members = sorted(set(int(s) for s in normal))
        seen = set()
        result = []
        for a in self.elements:
            if a in seen:
                continue
            coset = sorted({self.mul(n, a) for n in members})
            seen.update(coset)
            result.append(coset)
        return result

    def quotient(self, normal) -> tuple[FiniteGroup, list[int]]:
        """G/N with cosets labelled by the order of their minimal representatives, and the projection."""
        if not self.is_normal(normal):
            raise GroupTableError("normality", tuple(sorted(set(int(s) for s in normal))))
        cosets = self.cosets(normal)
        projection = [0] * self.order
        for label, coset in enumerate(cosets):
            for a in coset:
                projection[a] = label
        reps = [coset[0] for coset in cosets]
        table = [[projection[self.mul(a, b)] for b in reps] for a in reps]
        return FiniteGroup(table), projection

    def abelian_invariants(self) -> list[int] | None:
        """Invariant factors d_1 | d_2 | ... of an abelian group, None when nonabelian."""
        if not self.is_abelian():
            return None
        if self.order == 1:
            return []
        orders = self.element_orders
        primary: list[list[int]] = []
        for p, e in factorint(self.order).items():
            counts = [sum(1 for o in orders if (p**k) % o == 0) for k in range(e + 1)]
            # number of cyclic factors of exponent >= k is log_p(counts[k] / counts[k-1])
            at_least = []
            for k in range(1, e + 1):
                ratio, steps = counts[k] // counts[k - 1], 0
                while ratio > 1:
                    ratio //= p
                    steps += 1
                at_least.append(steps)
            exponents = sorted((k for k in range(1, e + 1) for _ in range(at_least[k - 1] - (at_least[k] if k < e else 0))), reverse=True)
            primary.append([p**k for k in exponents])
        width = max(len(powers) for powers in primary)
        factors = [1] * width
        for powers in primary:
            for position, q in enumerate(powers):
                factors[width - 1 - position] *= q
        return factors

    def label(self) -> str:
        invariants = self.abelian_invariants()
        if invariants is None:
            return f"order-{self.order} nonabelian"
        if not invariants:
            return "1"
        return "x".join(f"C{d}" for d in invariants)

    def to_json(self):
        data = {"order": self.order, "table": self.table.tolist()}
        if self.given_generators is not None:
            data["generators"] = list(self.given_generators)
        return data

    def __eq__(self, other):
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())

    def __repr__(self):
        return f"FiniteGroup({self.name or self.label()})"
