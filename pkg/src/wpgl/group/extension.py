# Central extensions 1 -> C -> E -> H -> 1 and homomorphic sections of E -> H.
#
# find_homomorphic_section enumerates every set-theoretic lift when there are
# at most WPGL_EXHAUSTIVE_SECTION_LIMIT of them, otherwise it lifts a
# generating set of H and extends along relations.

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from math import prod

from wpgl.util.config import exhaustive_section_limit
from wpgl.util.wpgl_types import Axiom, GroupTooLargeError, InvalidExtensionError

from .finite_group import FiniteGroup
from .homomorphism import GroupHom, extend_homomorphism
from .report import ValidationReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CentralExtension:
    kernel: FiniteGroup
    total: FiniteGroup
    quotient: FiniteGroup
    embed: GroupHom
    proj: GroupHom

    @classmethod
    def from_tables(cls, kernel: FiniteGroup, total: FiniteGroup, quotient: FiniteGroup, embed, proj) -> CentralExtension:
        return cls(kernel, total, quotient, GroupHom(kernel, total, embed), GroupHom(total, quotient, proj))

    def check(self) -> ValidationReport:
        report = ValidationReport("central extension")
        for name, f in (("embed", self.embed), ("proj", self.proj)):
            witness = f.witness()
            if witness is not None:
                report.add(Axiom.HOM, witness, f"{name} is not a homomorphism")
        if not report.ok:
            return report
        for c in self.kernel.elements:
            e = self.embed(c)
            for x in self.total.elements:
                if self.total.mul(e, x) != self.total.mul(x, e):
                    report.add(Axiom.CENTRAL, (c, x), f"embedded {c} does not commute with {x}")
                    break
        if not self.embed.is_injective():
            kernel = [c for c in self.embed.kernel() if c != 0]
            report.add(Axiom.EXACT, (kernel[0],), "embedding is not injective")
        if not self.proj.is_surjective():
            missing = sorted(set(self.quotient.elements) - set(self.proj.image()))
            report.add(Axiom.EXACT, (missing[0],), "projection is not surjective")
        image, kernel = set(self.embed.image()), set(self.proj.kernel())
        if image != kernel:
            report.add(Axiom.EXACT, (min(image ^ kernel),), "image of the embedding differs from the kernel of the projection")
        return report

    def require_valid(self) -> CentralExtension:
        report = self.check()
        if not report.ok:
            raise InvalidExtensionError(report)
        return self

    def to_json(self):
        return {"C": self.kernel.to_json(), "E": self.total.to_json(), "H": self.quotient.to_json(), "embed": self.embed.to_json(), "proj": self.proj.to_json()}


def central_extension_from_quotient(total: FiniteGroup, central) -> CentralExtension:
    """1 -> Z -> E -> E/Z -> 1 for a central subgroup Z."""
    kernel, embed = total.subgroup(central)
    quotient, proj = total.quotient(central)
    return CentralExtension.from_tables(kernel, total, quotient, embed, proj)


def _fibers(proj: GroupHom) -> list[list[int]]:
    fibers = [[] for _ in proj.codomain.elements]
    for x in proj.domain.elements:
        fibers[proj(x)].append(x)
    return fibers


def lift_count(proj: GroupHom) -> int:
    """Number of set-theoretic lifts fixing the identity."""
    fibers = _fibers(proj)
    return prod(len(fibers[h]) for h in proj.codomain.elements if h != 0)


def enumerate_sections(proj: GroupHom) -> list[GroupHom]:
    """Every homomorphic section, by checking all set-theoretic lifts."""
    count = lift_count(proj)
    limit = exhaustive_section_limit()
    if count > limit:
        raise GroupTooLargeError(f"{count} lifts exceed WPGL_EXHAUSTIVE_SECTION_LIMIT={limit}")
    fibers = _fibers(proj)
    quotient = proj.codomain
    sections = []
    for choice in itertools.product(*(fibers[h] for h in quotient.elements if h != 0)):
        s = GroupHom(quotient, proj.domain, (0,) + choice)
        if s.is_homomorphism():
            sections.append(s)
    logger.debug(f"exhaustive section search: {count} lifts, {len(sections)} sections")
    return sections


def _generator_section(proj: GroupHom) -> GroupHom | None:
    quotient = proj.codomain
    fibers = _fibers(proj)
    gens = quotient.generators
    # the image of a generator must have an order dividing the generator's order
    candidates = [[x for x in fibers[g] if quotient.element_order(g) % proj.domain.element_order(x) == 0] for g in gens]
    tried = 0
    for images in itertools.product(*candidates):
        tried += 1
        s = extend_homomorphism(quotient, proj.domain, gens, images)
        if s is not None:
            logger.debug(f"generator section search: found after {tried} candidate(s)")
            return s
    logger.debug(f"generator section search: none among {tried} candidate(s)")
    return None


def find_homomorphic_section(proj: GroupHom, method: str = "auto") -> GroupHom | None:
    """A homomorphism s with proj o s = id, or None.

    method is "exhaustive", "generators", or "auto" (exhaustive up to the configured lift limit).
    """
    if method == "auto":
        if lift_count(proj) <= exhaustive_section_limit():
            method = "exhaustive"
        else:
            logger.warning(f"{lift_count(proj)} lifts exceed the exhaustive limit, searching over generator lifts")
            method = "generators"
    if method == "exhaustive":
        sections = enumerate_sections(proj)
        return sections[0] if sections else None
    if method == "generators":
        return _generator_section(proj)
    raise ValueError(f"unknown section search method {method!r}")


def is_split_extension(ext: CentralExtension, method: str = "auto") -> GroupHom | None:
    ext.require_valid()
    return find_homomorphic_section(ext.proj, method)
