# Strict morphisms as butterflies, and the way back.
#
# from_strict_morphism: E = G1 x| H0 with h . a = a^(f0(h)^-1),
#   kappa(b) = (f1(b)^-1, psi(b)), iota(a) = (a, 1), sigma(a, h) = h, rho(a, h) = phi(a) f0(h)
# is_strictifiable: a homomorphic section s of sigma gives f0 = rho s and
#   iota(f1(b)) = s(psi(b)) kappa(b)^-1

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

from wpgl.group.constructions import semidirect_product
from wpgl.group.crossed_module import StrictMorphism
from wpgl.group.extension import find_homomorphic_section
from wpgl.group.homomorphism import GroupHom, extend_homomorphism

from .butterfly import Butterfly, require_valid

logger = logging.getLogger(__name__)


def from_strict_morphism(morphism: StrictMorphism) -> Butterfly:
    morphism.check()
    source, target = morphism.source, morphism.target
    g1, g0, h0 = target.g1, target.g0, source.g0
    f0 = morphism.f0
    left = [[target.action(a, g0.inv(f0(h))) for a in g1.elements] for h in h0.elements]
    center = semidirect_product(g1, h0, left)
    m = h0.order
    kappa = [g1.inv(morphism.f1(b)) * m + source.boundary(b) for b in source.g1.elements]
    iota = [a * m for a in g1.elements]
    sigma = [e % m for e in center.elements]
    rho = [g0.mul(target.boundary(e // m), f0(e % m)) for e in center.elements]
    return Butterfly.from_tables(source, target, center, kappa, iota, sigma, rho)


@dataclass(frozen=True)
class Strictification:
    section: GroupHom
    morphism: StrictMorphism

    def to_json(self):
        return {"section": self.section.to_json(), "f1": self.morphism.f1.to_json(), "f0": self.morphism.f0.to_json()}


def is_strictifiable(b: Butterfly, method: str = "auto") -> Strictification | None:
    """A section of sigma with its strict morphism, or None when sigma has no homomorphic section."""
    require_valid(b)
    section = find_homomorphic_section(b.sigma, method)
    if section is None:
        return None
    e = b.center
    f0 = b.rho.compose(section)
    preimage = {b.iota(a): a for a in b.target.g1.elements}
    f1 = [preimage[e.mul(section(b.source.boundary(beta)), e.inv(b.kappa(beta)))] for beta in b.source.g1.elements]
    morphism = StrictMorphism(b.source, b.target, GroupHom(b.source.g1, b.target.g1, f1), f0).check()
    return Strictification(section, morphism)


def find_butterfly_isomorphism(b1: Butterfly, b2: Butterfly) -> GroupHom | None:
    """f: E1 -> E2 bijective with f kappa1 = kappa2, f iota1 = iota2, sigma2 f = sigma1, rho2 f = rho1."""
    if b1.source != b2.source or b1.target != b2.target or b1.center.order != b2.center.order:
        return None
    e1, e2 = b1.center, b2.center
    gens = e1.generators
    candidates = [[y for y in e2.elements if e2.element_order(y) == e1.element_order(x) and b2.sigma(y) == b1.sigma(x) and b2.rho(y) == b1.rho(x)] for x in gens]
    for images in itertools.product(*candidates):
        f = extend_homomorphism(e1, e2, gens, images)
        if f is None or not f.is_injective():
            continue
        if f.compose(b1.kappa) == b2.kappa and f.compose(b1.iota) == b2.iota and b2.sigma.compose(f) == b1.sigma and b2.rho.compose(f) == b1.rho:
            return f
    return None
