"""Command-line interface.

Exit codes: 0 = success and the checked property holds; 1 = the property
fails or verification fails (a certificate is printed); 2 = input or
usage error; 3 = internal invariant violation (falsification alarm).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formats
from .classify import check_monotypy, check_monotypy_mss, check_strong_monotypy
from .errors import (InputError, InternalInvariantError,
                     NotStronglyMonotypicError)
from .fan import enumerate_primitive_bases, normal_fan, verify_fan_uniqueness
from .formats import (certificate_to_doc, dump, illumination_to_doc,
                      parse_directions, parse_polytope, polytope_to_doc,
                      reports_to_doc, skeleton_to_doc, vector_to_strings)
from .generators import FAMILIES, FamilySpec, generate
from .illuminate import build_illumination_set, verify_directions, verify_illumination
from .oracle import min_illumination_number
from .skeleton import extract_skeleton

EXIT_OK = 0
EXIT_PROPERTY_FAILS = 1
EXIT_INPUT_ERROR = 2
EXIT_INTERNAL = 3


def _load_polytope(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as err:
        raise InputError(f"cannot read {path}: {err}")
    return parse_polytope(text)


def _mss_cert_doc(cert):
    v1, v2, point = cert
    return {
        "subset_1": certificate_to_doc(v1),
        "subset_2": certificate_to_doc(v2),
        "common_point": vector_to_strings(point),
    }


def _cmd_classify(args):
    P = _load_polytope(args.file)
    N = P.normal_set
    strong, strong_cert = check_strong_monotypy(N)
    payload = {"strongly_monotypic": strong}
    certificates = {}
    if strong_cert is not None:
        certificates["conical_subset"] = certificate_to_doc(strong_cert)
    verdicts = [strong]
    if args.method in ("conical", "both"):
        mono, cert = check_monotypy(N)
        payload["monotypic"] = mono
        verdicts.append(mono)
        if cert is not None:
            certificates["uncaptured_conical_subset"] = certificate_to_doc(cert)
    if args.method in ("mss", "both"):
        mono_mss, cert = check_monotypy_mss(N)
        verdicts.append(mono_mss)
        if "monotypic" in payload and payload["monotypic"] != mono_mss:
            raise InternalInvariantError(
                "the two monotypy characterizations disagree")
        payload["monotypic"] = mono_mss
        if cert is not None:
            certificates["intersecting_primitive_subsets"] = _mss_cert_doc(cert)
    if certificates:
        payload["certificates"] = certificates
    return (EXIT_OK if all(verdicts) else EXIT_PROPERTY_FAILS), payload


def _cmd_skeleton(args):
    P = _load_polytope(args.file)
    skeleton = extract_skeleton(P.normal_set)
    return EXIT_OK, skeleton_to_doc(skeleton)


def _cmd_illuminate(args):
    P = _load_polytope(args.file)
    ill = build_illumination_set(P)
    payload = illumination_to_doc(P, ill)
    code = EXIT_OK
    if args.verify:
        ok, reports = verify_illumination(P, ill)
        payload["verified"] = ok
        payload["report"] = reports_to_doc(reports)
        if not ok:
            code = EXIT_PROPERTY_FAILS
    return code, payload


def _cmd_verify(args):
    P = _load_polytope(args.file)
    try:
        text = Path(args.directions).read_text(encoding="utf-8")
    except OSError as err:
        raise InputError(f"cannot read {args.directions}: {err}")
    directions, epsilon = parse_directions(text)
    ok, reports = verify_directions(P, directions, epsilon)
    payload = {"verified": ok, "report": reports_to_doc(reports)}
    return (EXIT_OK if ok else EXIT_PROPERTY_FAILS), payload


def _cmd_fan(args):
    P = _load_polytope(args.file)
    cones = normal_fan(P)
    payload = {
        "cones": [
            {"generators": [vector_to_strings(g) for g in c.generators],
             "vertex": vector_to_strings(c.vertex.point)}
            for c in cones
        ],
    }
    code = EXIT_OK
    if args.verify_unique:
        unique = verify_fan_uniqueness(P.normal_set, P)
        payload["unique"] = unique
        payload["primitive_basis_count"] = len(enumerate_primitive_bases(P.normal_set))
        if not unique:
            code = EXIT_PROPERTY_FAILS
    return code, payload


def _cmd_oracle(args):
    P = _load_polytope(args.file)
    k, directions = min_illumination_number(P)
    payload = {
        "min_illumination_number": k,
        "directions": [vector_to_strings(v) for v in directions],
    }
    return EXIT_OK, payload


def _cmd_gen(args):
    spec = FamilySpec(
        family=args.family,
        dims=tuple(args.dims or ()),
        seed=args.seed if args.randomize_offsets else None,
    )
    P = generate(spec)
    payload = polytope_to_doc(P)
    if args.output:
        Path(args.output).write_text(dump(payload, args.pretty) + "\n",
                                     encoding="utf-8")
        return EXIT_OK, {"written": args.output}
    return EXIT_OK, payload


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyillum",
        description="Classify polytope normal sets, extract skeletons, build "
                    "and verify illumination sets, and compute exact minimum "
                    "illumination numbers.")
    parser.add_argument("--pretty", action="store_true",
                        help="indent the JSON output")
    parser.add_argument("--threads", type=int, default=1,
                        help="worker count; results are schedule-independent "
                             "(currently always evaluated sequentially)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="monotypy and strong monotypy verdicts")
    p.add_argument("file")
    p.add_argument("--method", choices=("conical", "mss", "both"), default="both")
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("skeleton", help="extract the skeleton decomposition")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_skeleton)

    p = sub.add_parser("illuminate", help="build the illumination set")
    p.add_argument("file")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(handler=_cmd_illuminate)

    p = sub.add_parser("verify", help="verify an external direction set")
    p.add_argument("file")
    p.add_argument("--directions", required=True)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("fan", help="normal fan of a simple polytope")
    p.add_argument("file")
    p.add_argument("--verify-unique", action="store_true")
    p.set_defaults(handler=_cmd_fan)

    p = sub.add_parser("oracle", help="exact minimum illumination number")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_oracle)

    p = sub.add_parser("gen", help="generate a built-in instance")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--dims", type=int, nargs="+")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--randomize-offsets", action="store_true")
    p.add_argument("--output", "-o")
    p.set_defaults(handler=_cmd_gen)

    return parser


def run_command(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_INPUT_ERROR if err.code else EXIT_OK
    if args.threads < 1:
        print(dump({"error": "--threads must be at least 1"}))
        return EXIT_INPUT_ERROR
    try:
        code, payload = args.handler(args)
    except NotStronglyMonotypicError as err:
        payload = {"error": str(err),
                   "certificate": certificate_to_doc(err.certificate)}
        code = EXIT_PROPERTY_FAILS
    except InputError as err:
        payload = {"error": str(err)}
        if err.witness is not None:
            payload["witness"] = vector_to_strings(err.witness)
        code = EXIT_INPUT_ERROR
    except InternalInvariantError as err:
        payload = {"error": str(err)}
        code = EXIT_INTERNAL
    print(dump(payload, args.pretty))
    return code


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
