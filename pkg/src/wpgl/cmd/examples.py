"""Regenerate the structural data of the golden weight sequences and diff it against the stored values."""

from __future__ import annotations

import logging
import sys

import click

from wpgl.algebra.field import RATIONALS
from wpgl.algebra.polynomial import GradedRing
from wpgl.algebra.signature import WeightSignature
from wpgl.structure.invariants import pi0_report
from wpgl.structure.linear import BlockLinear
from wpgl.structure.representation import torus_exponents, unipotent_action_matrix
from wpgl.structure.unipotent import UnipotentElement, conj, level_basis
from wpgl.util.format import table_text

from .cmd_util import EXIT_INVALID, EXIT_OK, CommandResult, print_result
from .golden import GOLDEN

logger = logging.getLogger(__name__)


def _action_matrices(signature: WeightSignature) -> list[dict]:
    result = []
    for a in range(2, signature.t + 1):
        for b in range(a + 1, signature.t + 1):
            if level_basis(signature, a) and level_basis(signature, b):
                result.append(unipotent_action_matrix(signature, a, b).to_json())
    return result


def _torus_instance(signature: WeightSignature, instance: dict) -> dict:
    """Coordinates of diag(lambda) o u o diag(lambda)^-1 for the general element u with the given coordinates."""
    ring = GradedRing(signature, RATIONALS)
    values = iter(instance["coordinates"])
    rows = [[ring.zero() for _ in range(r)] for r in signature.multiplicities]
    for a in range(2, signature.t + 1):
        part = UnipotentElement.from_coordinates(ring, a, [next(values) for _ in level_basis(signature, a)])
        rows[a - 1] = list(part.table[a - 1])
    u = UnipotentElement(ring, tuple(tuple(row) for row in rows))
    g = BlockLinear.block_scalar(signature, RATIONALS, instance["lambda"]).as_automorphism(ring)
    image = conj(g, u)
    coordinates = [c.to_json() for a in range(2, signature.t + 1) for c in image.coordinates(a)]
    return {"lambda": instance["lambda"], "coordinates": instance["coordinates"], "image": coordinates}


def regenerate(fixture: dict) -> dict:
    """Every recorded key of the fixture, computed from the library alone."""
    signature = WeightSignature(tuple(fixture["weights"]))
    data = pi0_report(signature).to_json()
    data["action_matrices"] = _action_matrices(signature)
    data["torus_exponents"] = torus_exponents(signature)
    if "torus_instance" in fixture["expected"]:
        data["torus_instance"] = _torus_instance(signature, fixture["expected"]["torus_instance"])
    return {key: data.get(key) for key in fixture["expected"]}


def diff_fixture(fixture: dict) -> list[dict]:
    actual = regenerate(fixture)
    diffs = []
    for key, expected in fixture["expected"].items():
        if actual[key] != expected:
            diffs.append({"key": key, "expected": expected, "actual": actual[key]})
    return diffs


def examples_result(fixtures=None) -> CommandResult:
    fixtures = GOLDEN if fixtures is None else fixtures
    entries = []
    for fixture in fixtures:
        diffs = diff_fixture(fixture)
        logger.info(f"{fixture['name']}: {len(fixture['expected'])} keys, {len(diffs)} diff(s)")
        entry = {"name": fixture["name"], "case": fixture["case"], "weights": fixture["weights"], "records": fixture["records"], "ok": not diffs, "diffs": diffs}
        if "note" in fixture:
            entry["note"] = fixture["note"]
        entries.append(entry)
    ok = all(entry["ok"] for entry in entries)
    rows = [{"fixture": e["name"], "case": e["case"], "keys": len(f["expected"]), "diffs": len(e["diffs"]), "status": "ok" if e["ok"] else "FAIL"} for e, f in zip(entries, fixtures)]
    text = table_text(rows).splitlines()
    for entry in entries:
        for diff in entry["diffs"]:
            text.append(f"{entry['name']} {diff['key']}: expected {diff['expected']}, got {diff['actual']}")
    text.append("all golden fixtures match" if ok else "golden fixtures differ")
    return CommandResult({"fixtures": entries, "ok": ok}, text, EXIT_OK if ok else EXIT_INVALID)


@click.command()
@click.option(
    "--log-level",
    "-l",
    type=click.Choice(["debug", "info", "warn", "error"]),
    default="info",
    required=False,
)
@click.option("--json/--text", "as_json", default=False, help="Output canonical JSON instead of a table.")
def run(log_level: str, as_json: bool):
    level = getattr(logging, log_level.upper())
    logging.basicConfig(level=level)
    result = examples_result()
    print_result(result, as_json)
    sys.exit(result.exit_code)


if __name__ == "__main__":
    sys.exit(run())
