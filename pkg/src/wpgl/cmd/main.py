import argparse
import logging
import sys

from wpgl.algebra.counting import global_section_count, hilbert_series
from wpgl.butterfly.butterfly import check_butterfly
from wpgl.butterfly.quotient import quotient_invariants, weight_division_quotient
from wpgl.butterfly.strict import is_strictifiable
from wpgl.group.crossed_module import check_crossed_module
from wpgl.group.extension import is_split_extension
from wpgl.structure.endomorphism import compose
from wpgl.structure.invariants import count_d, count_k, counting_identity_holds, pi0_report
from wpgl.structure.unipotent import compose_factors, invert, unipotent_factorize
from wpgl.structure.unipotent import decompose as decompose_automorphism
from wpgl.util.config import log_level
from wpgl.util.format import table_text
from wpgl.util.loader import parse_automorphism, parse_butterfly, parse_crossed_module, parse_extension
from wpgl.util.saver import save_json
from wpgl.util.wpgl_types import InputError, WpglError

from .cmd_util import (
    EXIT_INPUT,
    EXIT_INVALID,
    EXIT_OK,
    CommandResult,
    error_result,
    field_arg,
    json_arg,
    print_result,
    report_lines,
    signature_arg,
)
from .examples import examples_result

logger = logging.getLogger(__name__)

COMMANDS = ["counts", "decompose", "sections", "verify", "split", "quotient", "examples"]

"""
counts

    print the monomial counts k_a and d_l(a, b), the unipotent dimensions, the order of pi1 and the pi0 report of PGL(n0,...,nr)

arguments:
- --weights : comma-separated weights n0,...,nr (at least two positive integers)
"""


def counts(args):
    sig = signature_arg(args)
    report = pi0_report(sig)
    d_tables = []
    for b in range(2, sig.t + 1):
        for a in range(1, b):
            values = [count_d(sig, a, b, l) for l in range(sig.weight(b) // sig.weight(a) + 1)]
            d_tables.append({"a": a, "b": b, "d": values, "identity_holds": counting_identity_holds(sig, a, b)})
    payload = {
        "signature": sig.to_json(),
        "weights": list(sig.weights),
        "multiplicities": list(sig.multiplicities),
        "k": [count_k(sig, a) for a in range(1, sig.t + 1)],
        "d": d_tables,
        "unipotent_dimensions": report.unipotent_dimensions,
        "pi1_order": report.pi1_order,
        "pi0": report.to_json(),
    }
    rows = [
        {"level": a, "weight": sig.weight(a), "rank": sig.multiplicity(a), "k": payload["k"][a - 1], "dim U": report.unipotent_dimensions[a - 1]}
        for a in range(1, sig.t + 1)
    ]
    text = [f"signature {sig}"] + table_text(rows).splitlines()
    text += [f"d(a={entry['a']}, b={entry['b']}) = {entry['d']}" for entry in d_tables]
    text += [
        f"pi1 order: {report.pi1_order}",
        f"reductive part: {report.reductive}",
        f"pi0: {report.pi0_shape} ({report.split.value})",
    ]
    if report.splitting_matrix is not None:
        text.append(f"splitting matrix: {report.splitting_matrix}")
    return CommandResult(payload, text)


"""
decompose

    split an equivariant automorphism F = u o l into its linear blocks l and unipotent part u, factor u = u_t o ... o u_2 and check the recomposition

arguments:
- --map : automorphism file {"signature", "field", "components"}
- --weights : signature, required when the file carries none (must agree otherwise)
- --field : q or fp:p, used when the file carries none (must agree otherwise)
"""


def decompose(args):
    data = json_arg(args, "map")
    f = parse_automorphism(data, signature_arg(args, required=False), field_arg(args))
    ring = f.ring
    u, ell = decompose_automorphism(f)
    factors = unipotent_factorize(u)
    recomposed = compose(compose_factors(ring, factors), ell.as_automorphism(ring))
    ok = recomposed == f
    payload = {
        "signature": f.signature.to_json(),
        "field": f.field.to_json(),
        "linear": ell.to_json(),
        "unipotent": u.to_json(),
        "unipotent_coordinates": [{"level": a, "coordinates": [c.to_json() for c in u.coordinates(a)]} for a in range(2, f.signature.t + 1)],
        "unipotent_factors": [{"level": factor.level(), "coordinates": [c.to_json() for c in factor.coordinates()], "table": factor.to_json()} for factor in factors],
        "inverse": invert(f).to_json(),
        "recomposition_ok": ok,
    }
    text = [f"map {f} over {f.field}"]
    text += [f"linear block {i}: {block}" for i, block in enumerate(payload["linear"], start=1)]
    text.append(f"unipotent part: {u}")
    if not factors:
        text.append("unipotent factors: none")
    text += [f"u_{factor.level()} = {factor}" for factor in factors]
    text.append(f"recomposition: {'ok' if ok else 'FAILED'}")
    return CommandResult(payload, text, EXIT_OK if ok else EXIT_INVALID)


"""
sections

    count the global sections of O(degree) on P(n0,...,nr), i.e. the solutions of a_0*n_0 + ... + a_r*n_r = degree

arguments:
- --weights : comma-separated weights
- --degree : the degree (negative degrees have no sections)
- --upto : list every count from 0 to degree and cross-check it against the product of 1/(1 - q^n_i)
"""


def sections(args):
    sig = signature_arg(args)
    if args.degree is None:
        raise InputError("--degree is required")
    degree = args.degree
    count = global_section_count(sig, degree)
    payload = {"signature": sig.to_json(), "degree": degree, "count": count}
    text = [f"h0(O({degree})) on P{sig} = {count}"]
    if args.upto:
        values = [global_section_count(sig, d) for d in range(degree + 1)]
        agrees = values == hilbert_series(sig, degree)
        payload["counts"] = values
        payload["generating_function_agrees"] = agrees
        text.append(f"counts 0..{degree}: {values}")
        text.append(f"generating function cross-check: {'ok' if agrees else 'FAILED'}")
        return CommandResult(payload, text, EXIT_OK if agrees else EXIT_INVALID)
    return CommandResult(payload, text)


"""
verify

    check every axiom of a crossed module, a butterfly or a central extension and list the failing instances with witnesses

arguments:
- --xmod : crossed module file {"G1", "G0", "boundary", "action"}
- --butterfly : butterfly file {"source", "target", "E", "kappa", "iota", "sigma", "rho"}
- --extension : central extension file {"C", "E", "H", "embed", "proj"}
"""


def verify(args):
    given = [name for name in ("xmod", "butterfly", "extension") if getattr(args, name)]
    if len(given) != 1:
        raise InputError("verify needs exactly one of --xmod, --butterfly, --extension")
    if args.xmod:
        report = check_crossed_module(parse_crossed_module(json_arg(args, "xmod")))
    elif args.butterfly:
        report = check_butterfly(parse_butterfly(json_arg(args, "butterfly")))
    else:
        report = parse_extension(json_arg(args, "extension")).check()
    return CommandResult(report.to_json(), report_lines(report), EXIT_OK if report.ok else EXIT_INVALID)


"""
split

    search for a homomorphic section: of sigma for a butterfly (with the induced strict morphism), or of the projection for a central extension

arguments:
- --butterfly : butterfly file
- --extension : central extension file
- --method : auto, exhaustive or generators (default: auto)
"""


def split(args):
    if bool(args.butterfly) == bool(args.extension):
        raise InputError("split needs exactly one of --butterfly, --extension")
    if args.butterfly:
        witness = is_strictifiable(parse_butterfly(json_arg(args, "butterfly")), args.method)
        payload = {"subject": "butterfly", "split": witness is not None, "section": None}
        if witness is not None:
            payload.update(witness.to_json())
    else:
        section = is_split_extension(parse_extension(json_arg(args, "extension")), args.method)
        payload = {"subject": "central extension", "split": section is not None, "section": None if section is None else section.to_json()}
    section_text = "none" if payload["section"] is None else str(payload["section"])
    text = [f"{payload['subject']}: {'split' if payload['split'] else 'not split'}", f"section: {section_text}"]
    if "f1" in payload:
        text.append(f"strict morphism: f1 = {payload['f1']}, f0 = {payload['f0']}")
    return CommandResult(payload, text)


"""
quotient

    compute the invariants (ker kappa, coker kappa, im rho, ker rho / im kappa) of the quotient of a weighted projective stack by a butterfly action,
    or divide a weight sequence by a common divisor of the weights

arguments:
- --butterfly : butterfly file
- --weights, --divide : signature and divisor of gcd(weights), for the quotient by a subgroup of mu_d acting through its character
"""


def quotient(args):
    if args.butterfly:
        invariants = quotient_invariants(parse_butterfly(json_arg(args, "butterfly")))
        payload = invariants.to_json()
        rows = [{"group": key, "order": payload[key]["order"], "label": payload[key]["label"]} for key in ("ker_kappa", "coker_kappa", "im_rho", "middle")]
        text = table_text(rows).splitlines()
        text.append(f"1-stack: {'yes' if invariants.is_one_stack else 'no'}")
        text.append(f"orbifold-type: {'yes' if invariants.is_orbifold_type else 'no'}")
        return CommandResult(payload, text)
    if args.divide is None:
        raise InputError("quotient needs --butterfly, or --weights with --divide")
    sig = signature_arg(args)
    divided = weight_division_quotient(sig, args.divide)
    return CommandResult({"signature": sig.to_json(), "divide": args.divide, "quotient": divided.to_json()}, [f"P{sig} / mu_{args.divide} = P{divided}"])


"""
examples

    regenerate the structural data of the golden weight sequences (unipotent dimensions, pi0 shapes, conjugation matrices, torus exponents) and diff against the stored values
"""


def examples(args):
    return examples_result()


def dispatch(args) -> CommandResult:
    try:
        return getattr(sys.modules[__name__], args.command)(args)
    except InputError as err:
        logger.error(f"{args.command}: {err}")
        return error_result(err, EXIT_INPUT)
    except (WpglError, ZeroDivisionError) as err:
        logger.error(f"{args.command}: {err}")
        return error_result(err, EXIT_INVALID)


def run(argv=None):
    parser = argparse.ArgumentParser(description="Weighted projective general linear 2-groups and butterflies")
    parser.add_argument("command", type=str, choices=COMMANDS, help="The command to execute.")

    # Signature arguments
    parser.add_argument("-w", "--weights", type=str, help="Specify comma-separated weights n0,...,nr.", default="")
    parser.add_argument("-f", "--field", type=str, help="Specify the coefficient field (q or fp:p).", default="")

    # Decompose arguments
    parser.add_argument("-m", "--map", type=str, help="Specify automorphism file.", default="")

    # Sections arguments
    parser.add_argument("-d", "--degree", type=int, help="Specify the degree of the line bundle.")
    parser.add_argument("--upto", action="store_true", help="List counts for every degree up to --degree.")

    # 2-group arguments
    parser.add_argument("--xmod", type=str, help="Specify crossed module file.", default="")
    parser.add_argument("--butterfly", type=str, help="Specify butterfly file.", default="")
    parser.add_argument("--extension", type=str, help="Specify central extension file.", default="")
    parser.add_argument("--method", type=str, choices=["auto", "exhaustive", "generators"], help="Specify the section search.", default="auto")
    parser.add_argument("--divide", type=int, help="Specify a divisor of the gcd of the weights.")

    # Output arguments
    parser.add_argument("--json", dest="as_json", action="store_true", help="Output canonical JSON.")
    parser.add_argument("--text", dest="as_json", action="store_false", help="Output text (default).")
    parser.add_argument("-o", "--output", type=str, help="Specify a file name to also save the JSON result to.", default="")
    parser.add_argument("-p", "--data-path", type=str, help="Specify the directory of --output.", default=".")
    parser.add_argument("-l", "--log-level", type=str, choices=["debug", "info", "warn", "error"], help="Specify log level.", default=log_level())

    # Parse the command-line arguments
    args = parser.parse_args(argv)
    logging.basicConfig(level=getattr(logging, args.log_level.upper()))

    result = dispatch(args)
    if args.output:
        name = save_json(path=args.data_path, name=args.output, data=result.payload)
        logger.info(f"saved {args.command} result to {args.data_path}/{name}")
    print_result(result, args.as_json)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(run())
