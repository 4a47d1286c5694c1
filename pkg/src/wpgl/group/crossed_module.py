# Crossed modules [d: G1 -> G0] with a right action of G0 on G1.
#
# CM1: d(b^a) = a^-1 d(b) a
# CM2: b^d(c) = c^-1 b c
# pi1 = ker d (central in G1), pi0 = G0 / im d (im d normal in G0)

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from wpgl.util.wpgl_types import Axiom, InvalidCrossedModuleError, StrictMorphismError

from .finite_group import FiniteGroup
from .homomorphism import GroupHom, RightAction
from .report import ValidationReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CrossedModule:
    g1: FiniteGroup
    g0: FiniteGroup
    boundary: GroupHom
    action: RightAction

    @classmethod
    def trivial_action(cls, g1: FiniteGroup, g0: FiniteGroup, boundary_values) -> CrossedModule:
        return cls(g1, g0, GroupHom(g1, g0, boundary_values), RightAction.trivial(g1, g0))

    @classmethod
    def conjugation(cls, group: FiniteGroup) -> CrossedModule:
        """[id: G -> G] with G acting on itself by conjugation."""
        return cls(group, group, GroupHom.identity(group), RightAction.conjugation(group))

    def to_json(self):
        return {"G1": self.g1.to_json(), "G0": self.g0.to_json(), "boundary": self.boundary.to_json(), "action": self.action.to_json()}


def check_crossed_module(xm: CrossedModule) -> ValidationReport:
    """Every failing instance of CM1 and CM2, plus a failing homomorphism or action law if any."""
    report = ValidationReport("crossed module")
    witness = xm.boundary.witness()
    if witness is not None:
        report.add(Axiom.HOM, witness, "boundary is not a homomorphism")
    failure = xm.action.witness()
    if failure is not None:
        report.add(Axiom.ACTION, failure[1], f"action fails the {failure[0]} law")
    if not report.ok:
        return report

    d = xm.boundary.values
    act = xm.action.table
    t0, inv0 = xm.g0.table, xm.g0.inverses
    t1, inv1 = xm.g1.table, xm.g1.inverses
    a = np.arange(xm.g0.order)[None, :]
    # [b, a]: d(b^a) vs a^-1 d(b) a
    cm1 = d[act] != t0[inv0[a], t0[d[:, None], a]]
    for b, x in np.argwhere(cm1):
        report.add(Axiom.CM1, (b, x), f"d({b}^{x}) = {d[act[b, x]]} but {x}^-1 d({b}) {x} = {t0[inv0[x], t0[d[b], x]]}")
    # [c, b]: b^d(c) vs c^-1 b c
    c = np.arange(xm.g1.order)[:, None]
    b = np.arange(xm.g1.order)[None, :]
    cm2 = act[b, d[c]] != t1[inv1[c], t1[b, c]]
    for cc, bb in np.argwhere(cm2):
        report.add(Axiom.CM2, (bb, cc), f"{bb}^d({cc}) = {act[bb, d[cc]]} but {cc}^-1 {bb} {cc} = {t1[inv1[cc], t1[bb, cc]]}")
    logger.debug(f"crossed module check: {len(report.violations)} violation(s)")
    return report


def require_valid(xm: CrossedModule) -> CrossedModule:
    report = check_crossed_module(xm)
    if not report.ok:
        raise InvalidCrossedModuleError(report)
    return xm


def pi1(xm: CrossedModule) -> tuple[FiniteGroup, list[int]]:
    """ker d as a group with its embedding in G1."""
    require_valid(xm)
    kernel = xm.boundary.kernel()
    if not xm.g1.is_central(kernel):
        raise ArithmeticError("kernel of the boundary is not central")
    return xm.g1.subgroup(kernel)


def pi0(xm: CrossedModule) -> tuple[FiniteGroup, list[int]]:
    """G0 / im d with the projection from G0."""
    require_valid(xm)
    return xm.g0.quotient(xm.boundary.image())


def conjugation_on_image_agrees(xm: CrossedModule) -> bool:
    """G0 acting on im d by conjugation equals d applied to the action, element by element."""
    require_valid(xm)
    for b in xm.g1.elements:
        for a in xm.g0.elements:
            if xm.g0.conjugate(xm.boundary(b), a) != xm.boundary(xm.action(b, a)):
                return False
    return True


@dataclass(frozen=True)
class StrictMorphism:
    """(f1, f0): [psi: H1 -> H0] -> [phi: G1 -> G0] with phi f1 = f0 psi and f1(b^h) = f1(b)^f0(h)."""

    source: CrossedModule
    target: CrossedModule
    f1: GroupHom
    f0: GroupHom

    def check(self) -> StrictMorphism:
        for name, f in (("f1", self.f1), ("f0", self.f0)):
            witness = f.witness()
            if witness is not None:
                raise StrictMorphismError(f"{name} is not a homomorphism", witness)
        if self.f1.domain != self.source.g1 or self.f1.codomain != self.target.g1:
            raise StrictMorphismError("f1 does not map H1 to G1")
        if self.f0.domain != self.source.g0 or self.f0.codomain != self.target.g0:
            raise StrictMorphismError("f0 does not map H0 to G0")
        psi, phi = self.source.boundary, self.target.boundary
        for b in self.source.g1.elements:
            if phi(self.f1(b)) != self.f0(psi(b)):
                raise StrictMorphismError("boundaries do not commute", (b,))
            for h in self.source.g0.elements:
                if self.f1(self.source.action(b, h)) != self.target.action(self.f1(b), self.f0(h)):
                    raise StrictMorphismError("actions are not respected", (b, h))
        return self
