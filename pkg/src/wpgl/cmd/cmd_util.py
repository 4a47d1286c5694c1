from __future__ import annotations

import logging
from dataclasses import dataclass, field

from wpgl.algebra.field import Field
from wpgl.algebra.signature import WeightSignature
from wpgl.group.report import ValidationReport
from wpgl.util.format import print_bounded_multiline_message
from wpgl.util.loader import read_json_file
from wpgl.util.saver import canonical_json
from wpgl.util.wpgl_types import AxiomDescriptions, InputError, InvalidSignatureError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INPUT = 2


@dataclass
class CommandResult:
    payload: dict
    text: list[str] = field(default_factory=list)
    exit_code: int = EXIT_OK

    def render(self, as_json: bool) -> str:
        if as_json:
            return canonical_json(self.payload)
        return "\n".join(self.text) + "\n"


def error_result(err: Exception, exit_code: int) -> CommandResult:
    message = str(err) or type(err).__name__
    return CommandResult({"error": type(err).__name__, "message": message}, [f"error: {message}"], exit_code)


def signature_arg(args, required: bool = True) -> WeightSignature | None:
    if not args.weights:
        if required:
            raise InputError("--weights is required, e.g. --weights 1,2,3")
        return None
    try:
        return WeightSignature.parse(args.weights)
    except InvalidSignatureError as err:
        raise InputError(str(err)) from err


def field_arg(args) -> Field | None:
    if not args.field:
        return None
    return Field.parse(args.field)


def json_arg(args, name: str):
    filepath = getattr(args, name)
    if not filepath:
        raise InputError(f"--{name} is required")
    logger.info(f"reading {name} from {filepath}")
    return read_json_file(filepath)


def report_lines(report: ValidationReport, limit: int = 20) -> list[str]:
    lines = report.lines(limit)
    for axiom in sorted(report.axioms(), key=lambda a: a.value):
        lines.append(f"  {axiom.value}: {AxiomDescriptions[axiom]}")
    return lines


def print_result(result: CommandResult, as_json: bool):
    if as_json or result.exit_code == EXIT_OK:
        print(result.render(as_json), end="")
    else:
        print_bounded_multiline_message(result.text)
