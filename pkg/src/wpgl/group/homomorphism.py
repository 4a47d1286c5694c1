# Homomorphisms and right actions between FiniteGroups, stored as value tables.
#
# Tables are range-checked on construction; the algebraic laws are queried
# through witness() so validators can report a failing table instead of raising.

from __future__ import annotations

import itertools
import logging

import numpy as np

from wpgl.util.wpgl_types import ActionError, HomomorphismError

from .finite_group import FiniteGroup, _first

logger = logging.getLogger(__name__)


class GroupHom:
    def __init__(self, domain: FiniteGroup, codomain: FiniteGroup, values):
        values = np.array(values, dtype=np.int64)
        if values.shape != (domain.order,):
            raise HomomorphismError((domain.order,), message=f"value table must have {domain.order} entries")
        if values.min() < 0 or values.max() >= codomain.order:
            raise HomomorphismError(_first((values < 0) | (values >= codomain.order)), message="value outside the codomain")
        values.setflags(write=False)
        self.domain = domain
        self.codomain = codomain
        self.values = values

    @classmethod
    def checked(cls, domain: FiniteGroup, codomain: FiniteGroup, values) -> GroupHom:
        f = cls(domain, codomain, values)
        witness = f.witness()
        if witness is not None:
            raise HomomorphismError(witness)
        return f

    @classmethod
    def trivial(cls, domain: FiniteGroup, codomain: FiniteGroup) -> GroupHom:
        return cls(domain, codomain, [0] * domain.order)

    @classmethod
    def identity(cls, group: FiniteGroup) -> GroupHom:
        return cls(group, group, list(group.elements))

    def witness(self) -> tuple | None:
        """A pair (a, b) with f(ab) != f(a)f(b), or None for a homomorphism."""
        f = self.values
        bad = f[self.domain.table] != self.codomain.table[f[:, None], f[None, :]]
        return _first(bad) if bad.any() else None

    def is_homomorphism(self) -> bool:
        return self.witness() is None

    def __call__(self, a: int) -> int:
        return int(self.values[a])

    def kernel(self) -> list[int]:
        return [int(a) for a in np.flatnonzero(self.values == 0)]

    def image(self) -> list[int]:
        return sorted(set(int(v) for v in self.values))

    def is_injective(self) -> bool:
        return len(self.image()) == self.domain.order

    def is_surjective(self) -> bool:
        return len(self.image()) == self.codomain.order

    def is_trivial(self) -> bool:
        return not self.values.any()

    def compose(self, inner: GroupHom) -> GroupHom:
        """self o inner."""
        if inner.codomain != self.domain:
            raise HomomorphismError((), message="codomain of the inner map is not the domain of the outer map")
        return GroupHom(inner.domain, self.codomain, self.values[inner.values])

    def to_json(self):
        return self.values.tolist()

    def __eq__(self, other):
        if not isinstance(other, GroupHom):
            return NotImplemented
        return self.domain == other.domain and self.codomain == other.codomain and np.array_equal(self.values, other.values)

    def __hash__(self):
        return hash(self.values.tobytes())


class RightAction:
    """table[b][a] = b^a for b in the acted group and a in the acting group."""

    def __init__(self, acted: FiniteGroup, acting: FiniteGroup, table):
        table = np.array(table, dtype=np.int64)
        if table.shape != (acted.order, acting.order):
            raise ActionError((acted.order, acting.order), message="action table has the wrong shape")
        if table.min() < 0 or table.max() >= acted.order:
            raise ActionError(_first((table < 0) | (table >= acted.order)), message="action value outside the acted group")
        table.setflags(write=False)
        self.acted = acted
        self.acting = acting
        self.table = table

    @classmethod
    def trivial(cls, acted: FiniteGroup, acting: FiniteGroup) -> RightAction:
        return cls(acted, acting, np.repeat(np.arange(acted.order)[:, None], acting.order, axis=1))

    @classmethod
    def conjugation(cls, group: FiniteGroup) -> RightAction:
        """b^a = a^-1 b a."""
        return cls(group, group, [[group.conjugate(b, a) for a in group.elements] for b in group.elements])

    @classmethod
    def through(cls, acted: FiniteGroup, acting: FiniteGroup, f: GroupHom, base: RightAction) -> RightAction:
        """b^a = b^{f(a)} for an action `base` of f's codomain."""
        return cls(acted, acting, base.table[:, f.values])

    def __call__(self, b: int, a: int) -> int:
        return int(self.table[b, a])

    def witness(self) -> tuple[str, tuple] | None:
        """The first failing law with its witness, or None for a right action by automorphisms."""
        act = self.table
        n1 = self.acted.table
        if not np.array_equal(act[:, 0], np.arange(self.acted.order)):
            return "identity", _first(act[:, 0] != np.arange(self.acted.order))
        bad = act[act] != act[:, self.acting.table]
        if bad.any():
            return "composition", _first(bad)
        bad = act[n1] != n1[act[:, None, :], act[None, :, :]]
        if bad.any():
            return "automorphism", _first(bad)
        return None

    def is_action(self) -> bool:
        return self.witness() is None

    def __eq__(self, other):
        if not isinstance(other, RightAction):
            return NotImplemented
        return self.acted == other.acted and self.acting == other.acting and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())

    def to_json(self):
        return self.table.tolist()


def extend_homomorphism(domain: FiniteGroup, codomain: FiniteGroup, generators, images) -> GroupHom | None:
    """The homomorphism sending generators[k] to images[k], or None when no such map exists.

    Values spread from the identity along right multiplication by generators;
    any disagreement along the way means the assignment violates a relation.
    """
    generators = [int(g) for g in generators]
    images = [int(v) for v in images]
    if len(domain.generated(generators)) != domain.order:
        raise HomomorphismError(tuple(generators), message="assigned elements do not generate the domain")
    values = {0: 0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for g, v in zip(generators, images):
            y = domain.mul(x, g)
            w = codomain.mul(values[x], v)
            if y in values:
                if values[y] != w:
                    return None
            else:
                values[y] = w
                frontier.append(y)
    return GroupHom(domain, codomain, [values[a] for a in domain.elements])


def find_isomorphism(g: FiniteGroup, h: FiniteGroup) -> GroupHom | None:
    if g.order != h.order or sorted(g.element_orders) != sorted(h.element_orders):
        return None
    gens = g.generators
    candidates = [[b for b in h.elements if h.element_order(b) == g.element_order(a)] for a in gens]
    for images in itertools.product(*candidates):
        f = extend_homomorphism(g, h, gens, images)
        if f is not None and f.is_injective():
            return f
    return None


def are_isomorphic(g: FiniteGroup, h: FiniteGroup) -> bool:
    return find_isomorphism(g, h) is not None
