import json
import logging
import os

from wpgl.algebra.field import Field
from wpgl.algebra.polynomial import GradedPolynomial, GradedRing
from wpgl.algebra.signature import WeightSignature, parse_variable_name
from wpgl.butterfly.butterfly import Butterfly
from wpgl.group.crossed_module import CrossedModule
from wpgl.group.extension import CentralExtension
from wpgl.group.finite_group import FiniteGroup
from wpgl.group.homomorphism import GroupHom, RightAction
from wpgl.structure.endomorphism import EquivariantEndomorphism, validate

from .config import default_field
from .wpgl_types import InputError, WpglError

logger = logging.getLogger(__name__)

# errors raised by malformed json content, reported as input errors
_MALFORMED = (KeyError, IndexError, TypeError, ValueError, AttributeError)


def load_json(path: str, name: str | None = None):
    if name is None:
        filepath = path
    else:
        if name.endswith(".json") is False:
            name = name + ".json"
        filepath = os.path.join(path, name)
    try:
        with open(filepath) as f:
            res = json.load(f)
        return res
    except Exception as err:
        logger.error(f"fail to load json {filepath}: {err}")
        return None


def read_json_file(filepath: str):
    data = load_json(filepath)
    if data is None:
        raise InputError(f"cannot read json from {filepath}")
    return data


##########################################################################
# algebra


def parse_field(spec=None) -> Field:
    if spec is None:
        spec = default_field()
    return Field.parse(spec)


def parse_signature(obj) -> WeightSignature:
    if isinstance(obj, str):
        return WeightSignature.parse(obj)
    try:
        return WeightSignature(tuple(obj))
    except TypeError as err:
        raise InputError(f"bad signature {obj!r}") from err


def parse_polynomial(ring: GradedRing, obj) -> GradedPolynomial:
    """Parse a term list, or a {"terms": ...} object whose optional signature and field must match the ring."""
    if isinstance(obj, dict):
        if "signature" in obj and parse_signature(obj["signature"]) != ring.signature:
            raise InputError(f"polynomial signature {obj['signature']} does not match {ring.signature}")
        if "field" in obj and Field.parse(obj["field"]) != ring.field:
            raise InputError(f"polynomial field {obj['field']} does not match {ring.field}")
        obj = obj.get("terms", [])
    if not isinstance(obj, list):
        raise InputError(f"polynomial terms must be a list, got {type(obj).__name__}")
    index = {name: k for k, name in enumerate(ring.parameters, start=ring.nvars)}
    result = ring.zero()
    for term in obj:
        exps = [0] * ring.width
        for name, e in term.get("exps", {}).items():
            if name in index:
                k = index[name]
            else:
                variable = parse_variable_name(name)
                if variable not in ring.signature.variable_index:
                    raise InputError(f"variable {name} is not a coordinate of {ring.signature}")
                k = ring.signature.variable_index[variable]
            if not isinstance(e, int) or isinstance(e, bool):
                raise InputError(f"exponent {e!r} for {name} is not an integer")
            if e < 0:
                raise InputError(f"negative exponent {e} for {name}")
            exps[k] += e
        result = result + ring.monomial(tuple(exps), ring.field.parse_element(term["coeff"]))
    return result


def parse_automorphism(data, signature: WeightSignature | None = None, field: Field | None = None) -> EquivariantEndomorphism:
    """Build the map in `data`; flags fill in a missing signature or field and must agree with the file otherwise."""
    try:
        if "signature" in data:
            file_signature = parse_signature(data["signature"])
            if signature is not None and signature != file_signature:
                raise InputError(f"map signature {file_signature} does not match --weights {signature}")
            signature = file_signature
        if signature is None:
            raise InputError("no signature in the map file and no --weights given")
        if "field" in data:
            file_field = Field.parse(data["field"])
            if field is not None and field != file_field:
                raise InputError(f"map field {file_field} does not match --field {field}")
            field = file_field
        if field is None:
            field = parse_field()
        ring = GradedRing(signature, field)
        table = [[parse_polynomial(ring, poly) for poly in row] for row in data["components"]]
    except InputError:
        raise
    except WpglError as err:
        raise InputError(str(err)) from err
    except _MALFORMED as err:
        raise InputError(f"malformed map: {err!r}") from err
    return validate(ring, table)


##########################################################################
# finite groups


def parse_group(obj) -> FiniteGroup:
    try:
        group = FiniteGroup(obj["table"], generators=obj.get("generators"))
        if "order" in obj and int(obj["order"]) != group.order:
            raise InputError(f"declared order {obj['order']} but the table has {group.order} rows")
    except InputError:
        raise
    except _MALFORMED as err:
        raise InputError(f"malformed group: {err}") from err
    return group


def parse_crossed_module(obj) -> CrossedModule:
    try:
        g1 = parse_group(obj["G1"])
        g0 = parse_group(obj["G0"])
        return CrossedModule(g1, g0, GroupHom(g1, g0, obj["boundary"]), RightAction(g1, g0, obj["action"]))
    except InputError:
        raise
    except _MALFORMED as err:
        raise InputError(f"malformed crossed module: {err}") from err


def parse_extension(obj) -> CentralExtension:
    try:
        return CentralExtension.from_tables(parse_group(obj["C"]), parse_group(obj["E"]), parse_group(obj["H"]), obj["embed"], obj["proj"])
    except InputError:
        raise
    except _MALFORMED as err:
        raise InputError(f"malformed extension: {err}") from err


def parse_butterfly(obj) -> Butterfly:
    try:
        return Butterfly.from_tables(
            parse_crossed_module(obj["source"]),
            parse_crossed_module(obj["target"]),
            parse_group(obj["E"]),
            obj["kappa"],
            obj["iota"],
            obj["sigma"],
            obj["rho"],
        )
    except InputError:
        raise
    except _MALFORMED as err:
        raise InputError(f"malformed butterfly: {err}") from err
