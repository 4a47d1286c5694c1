# Butterflies between crossed modules [psi: H1 -> H0] and [phi: G1 -> G0].
#
#   H1        G1
#     kappa  iota
#         E
#     sigma  rho
#   H0        G0
#
# B0: sigma kappa = psi, rho iota = phi
# B1: rho kappa and sigma iota are trivial
# B2: 1 -> G1 -> E -> H0 -> 1 is short exact
# B3: iota(a^rho(x)) = x^-1 iota(a) x and kappa(b^sigma(x)) = x^-1 kappa(b) x

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from wpgl.group.crossed_module import CrossedModule, check_crossed_module
from wpgl.group.finite_group import FiniteGroup
from wpgl.group.homomorphism import GroupHom
from wpgl.group.report import ValidationReport
from wpgl.util.wpgl_types import Axiom, InvalidButterflyError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Butterfly:
    source: CrossedModule
    target: CrossedModule
    center: FiniteGroup
    kappa: GroupHom
    iota: GroupHom
    sigma: GroupHom
    rho: GroupHom

    @classmethod
    def from_tables(cls, source: CrossedModule, target: CrossedModule, center: FiniteGroup, kappa, iota, sigma, rho) -> Butterfly:
        return cls(
            source,
            target,
            center,
            GroupHom(source.g1, center, kappa),
            GroupHom(target.g1, center, iota),
            GroupHom(center, source.g0, sigma),
            GroupHom(center, target.g0, rho),
        )

    def maps(self) -> dict[str, GroupHom]:
        return {"kappa": self.kappa, "iota": self.iota, "sigma": self.sigma, "rho": self.rho}

    def with_map(self, name: str, values) -> Butterfly:
        tables = {key: f.values for key, f in self.maps().items()}
        tables[name] = values
        return Butterfly.from_tables(self.source, self.target, self.center, **tables)

    def to_json(self):
        data = {"source": self.source.to_json(), "target": self.target.to_json(), "E": self.center.to_json()}
        data.update({name: f.to_json() for name, f in self.maps().items()})
        return data


def _collision(values) -> tuple[int, int]:
    """The first pair a < a' with values[a] == values[a']."""
    first = {}
    for a, v in enumerate(values.tolist()):
        if v in first:
            return first[v], a
        first[v] = a
    raise ValueError("map is injective")


def _report_pairs(report: ValidationReport, axiom: Axiom, mask, message):
    for witness in np.argwhere(mask):
        report.add(axiom, tuple(witness), message(*(int(w) for w in witness)))


def check_butterfly(b: Butterfly) -> ValidationReport:
    """Every failing instance of B0-B3, plus homomorphism failures and the two crossed-module checks."""
    report = ValidationReport("butterfly")
    report.include(check_crossed_module(b.source), "source")
    report.include(check_crossed_module(b.target), "target")
    for name, f in b.maps().items():
        witness = f.witness()
        if witness is not None:
            report.add(Axiom.HOM, witness, f"{name} is not a homomorphism")

    kappa, iota, sigma, rho = b.kappa.values, b.iota.values, b.sigma.values, b.rho.values
    psi, phi = b.source.boundary.values, b.target.boundary.values
    _report_pairs(report, Axiom.B0, sigma[kappa] != psi, lambda x: f"sigma(kappa({x})) != psi({x})")
    _report_pairs(report, Axiom.B0, rho[iota] != phi, lambda x: f"rho(iota({x})) != phi({x})")
    _report_pairs(report, Axiom.B1, rho[kappa] != 0, lambda x: f"rho(kappa({x})) is not the identity")
    _report_pairs(report, Axiom.B1, sigma[iota] != 0, lambda x: f"sigma(iota({x})) is not the identity")

    if not b.iota.is_injective():
        a, other = _collision(b.iota.values)
        report.add(Axiom.B2, (a, other), f"iota is not injective: iota({a}) = iota({other})")
    if not b.sigma.is_surjective():
        missing = sorted(set(b.source.g0.elements) - set(b.sigma.image()))
        report.add(Axiom.B2, (missing[0],), f"sigma is not surjective: {missing[0]} has no preimage")
    difference = set(b.iota.image()) ^ set(b.sigma.kernel())
    if difference:
        x = min(difference)
        report.add(Axiom.B2, (x,), f"image of iota differs from kernel of sigma at {x}")

    table, inverses = b.center.table, b.center.inverses
    x = np.arange(b.center.order)[None, :]
    # [a, x]: iota(a^rho(x)) vs x^-1 iota(a) x
    lhs = iota[b.target.action.table[:, rho]]
    rhs = table[inverses[x], table[iota[:, None], x]]
    _report_pairs(report, Axiom.B3, lhs != rhs, lambda a, e: f"iota({a}^rho({e})) != {e}^-1 iota({a}) {e}")
    lhs = kappa[b.source.action.table[:, sigma]]
    rhs = table[inverses[x], table[kappa[:, None], x]]
    _report_pairs(report, Axiom.B3, lhs != rhs, lambda b1, e: f"kappa({b1}^sigma({e})) != {e}^-1 kappa({b1}) {e}")
    logger.debug(f"butterfly check: {len(report.violations)} violation(s)")
    return report


def require_valid(b: Butterfly) -> Butterfly:
    report = check_butterfly(b)
    if not report.ok:
        raise InvalidButterflyError(report)
    return b
