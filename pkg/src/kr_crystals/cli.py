"""Command line for B^{m,i}: enumeration, graphs, promotion, operators and verification.

Exit codes: 0 on success, 1 when a verification or dimension check fails,
2 on usage errors, malformed input and non-members.
"""

import argparse
import json
import logging
import re
import sys
from typing import Any, Sequence, TextIO

import pydantic as pdt

from kr_crystals import configurations
from kr_crystals.crystal.graph import graph_to_dot, graph_to_json
from kr_crystals.crystal.models import CrystalGraph, Report
from kr_crystals.crystal.verification import verify_axioms, verify_stembridge
from kr_crystals.errors import InvariantError, NotAMemberError, ShapeError
from kr_crystals.kr_crystal import KRCrystal
from kr_crystals.polytope import promotion
from kr_crystals.polytope.patterns import enumerate_patterns, weyl_dimension
from kr_crystals.tableaux.comparison import compare_models

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

OPERATOR = re.compile(r"^(?P<kind>[fe])(?P<index>\d+)$")

VERIFY_SUITES = ("axioms", "stembridge", "promotion", "oracle")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, required=True, help="Rank of A_n.")
    common.add_argument("--m", type=int, required=True, help="Level.")
    common.add_argument("--i", type=int, required=True, help="Classical node.")
    common.add_argument("--format", choices=("json", "dot", "text"), default="text")
    common.add_argument(
        "--model",
        choices=[model.value for model in configurations.Model],
        default=configurations.Model.POLYTOPE.value,
    )
    common.add_argument("--input", default=None, help="Element JSON file, or - for stdin.")
    common.add_argument("--log-level", default=None, help="Logging level, e.g. INFO.")

    parser = argparse.ArgumentParser(
        prog="kr-crystals", description="Kirillov-Reshetikhin crystals B^{m,i} of type A_n."
    )
    commands = parser.add_subparsers(dest="command", required=True)
    commands.add_parser("enumerate", parents=[common], help="List every element.")
    graph = commands.add_parser("graph", parents=[common], help="Export the crystal graph.")
    graph.add_argument("--affine", action="store_true", help="Include 0-arrows.")
    promote = commands.add_parser("promote", parents=[common], help="Apply promotion.")
    promote.add_argument("--trace", action="store_true", help="Print intermediate columns.")
    apply = commands.add_parser("apply", parents=[common], help="Apply one operator.")
    apply.add_argument("--op", required=True, help="f<l> or e<l>, l in 0..n.")
    verify = commands.add_parser("verify", parents=[common], help="Run a verification suite.")
    verify.add_argument("suite", choices=VERIFY_SUITES)
    verify.add_argument("--affine", action="store_true", help="Check axioms over 0..n.")
    commands.add_parser("dim", parents=[common], help="Compare count and Weyl dimension.")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    try:
        config = configurations.KRCrystalConfiguration(
            model=args.model,
            shape={"n": args.n, "m": args.m, "i": args.i},
            affine=getattr(args, "affine", False),
        )
    except pdt.ValidationError as exc:
        print(f"error: {_first_error(exc)}", file=sys.stderr)
        return EXIT_USAGE
    level = (args.log_level or config.log_level).upper()
    if not isinstance(logging.getLevelName(level), int):
        print(f"error: unknown log level {level}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=level)

    handler = COMMANDS[args.command]
    try:
        return handler(args, config, sys.stdout)
    except (pdt.ValidationError, json.JSONDecodeError) as exc:
        print(f"error: malformed input: {exc}", file=sys.stderr)
    except (ShapeError, NotAMemberError) as exc:
        print(f"error: not an element of {config.shape}: {exc}", file=sys.stderr)
    except OSError as exc:
        print(f"error: cannot read input: {exc}", file=sys.stderr)
    except (NotImplementedError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    except InvariantError as exc:
        logger.error(f"Invariant violated: {exc}")
        return EXIT_FAILED
    return EXIT_USAGE


def _first_error(exc: pdt.ValidationError) -> str:
    return exc.errors()[0]["msg"]


def _read_element(args: argparse.Namespace, crystal: KRCrystal) -> Any:
    if args.input is None:
        raise ValueError("--input is required for this command")
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input, encoding="utf-8") as file:
            text = file.read()
    return crystal.load(json.loads(text))


def _write_element(crystal: KRCrystal, b: Any, fmt: str, out: TextIO) -> None:
    if fmt == "json":
        print(json.dumps(crystal.dump(b)), file=out)
    else:
        print(crystal.label(b), file=out)


def _write_report(report: Report, fmt: str, out: TextIO) -> int:
    if fmt == "json":
        document = {
            "title": report.title,
            "checked": report.checked,
            "ok": report.ok,
            "facts": report.facts,
            "violations": [str(violation) for violation in report.violations],
        }
        print(json.dumps(document), file=out)
    else:
        print(report.summary(), file=out)
    return EXIT_OK if report.ok else EXIT_FAILED


def _write_graph(graph: CrystalGraph, crystal: KRCrystal, fmt: str, out: TextIO) -> None:
    if fmt == "dot":
        print(graph_to_dot(graph, crystal.label), file=out, end="")
    elif fmt == "json":
        print(json.dumps(graph_to_json(graph, crystal.dump)), file=out)
    else:
        for source, l, target in graph.edges:
            print(
                f"{crystal.label(graph.vertices[source])} --{l}--> "
                f"{crystal.label(graph.vertices[target])}",
                file=out,
            )


def run_enumerate(args, config, out) -> int:
    crystal = KRCrystal(config)
    elements = crystal.enumerate()
    if args.format == "json":
        print(json.dumps([crystal.dump(b) for b in elements]), file=out)
    else:
        for b in elements:
            print(crystal.label(b), file=out)
    return EXIT_OK


def run_graph(args, config, out) -> int:
    crystal = KRCrystal(config)
    _write_graph(crystal.graph(), crystal, args.format, out)
    return EXIT_OK


def run_promote(args, config, out) -> int:
    crystal = KRCrystal(config)
    b = _read_element(args, crystal)
    if args.trace:
        if config.model != configurations.Model.POLYTOPE:
            raise ValueError("--trace is only available for the polytope model")
        image, trace = promotion.promote(b)
        for line in trace.lines():
            print(line, file=out)
    else:
        image = crystal.promote(b)
    _write_element(crystal, image, args.format, out)
    return EXIT_OK


def run_apply(args, config, out) -> int:
    match = OPERATOR.match(args.op)
    if match is None:
        raise ValueError(f"Unknown operator {args.op!r}, expected f<l> or e<l>")
    l = int(match["index"])
    if l == 0 and not config.affine:
        config = config.model_copy(update={"affine": True})
    crystal = KRCrystal(config)
    b = _read_element(args, crystal)
    image = crystal.f(b, l) if match["kind"] == "f" else crystal.e(b, l)
    if image is None:
        print("none", file=out)
    else:
        _write_element(crystal, image, args.format, out)
    return EXIT_OK


def run_verify(args, config, out) -> int:
    shape = config.shape
    match args.suite:
        case "axioms":
            crystal = KRCrystal(config)
            report = verify_axioms(crystal.graph(), crystal.crystal)
        case "stembridge":
            crystal = KRCrystal(config.model_copy(update={"affine": False}))
            report = verify_stembridge(crystal.graph())
        case "promotion":
            report = promotion.verify_weak_promotion(shape)
        case "oracle":
            report = compare_models(shape)
    return _write_report(report, args.format, out)


def run_dim(args, config, out) -> int:
    count = len(enumerate_patterns(config.shape))
    weyl = weyl_dimension(config.shape)
    status = "OK" if count == weyl else "MISMATCH"
    print(f"{count} {weyl} {status}", file=out)
    return EXIT_OK if count == weyl else EXIT_FAILED


COMMANDS = {
    "enumerate": run_enumerate,
    "graph": run_graph,
    "promote": run_promote,
    "apply": run_apply,
    "verify": run_verify,
    "dim": run_dim,
}


if __name__ == "__main__":
    sys.exit(main())
