"""Command-line front end.

Exit codes: 0 on success, 1 on domain errors (with a machine-readable
error JSON on stdout), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .classification import classify, verify_power_properties
from .defining_graph import DefiningGraph
from .errors import RaagError
from .realization import Realization, build_standard_realization, validate_realization
from .subsurface_map import Constants, make_certificate
from .syllables import cyclically_reduce, syllable_order
from .words import (
    minimal_representatives,
    normalize,
    oracle_min_syllables,
    parse_word,
)

ENV_CAP = "RAAGMCG_CAP"


def _default_cap() -> int:
    raw = os.environ.get(ENV_CAP)
    if raw is None:
        return 100_000
    try:
        return int(raw)
    except ValueError:
        return 100_000


def _number(text: str):
    try:
        return int(text)
    except ValueError:
        return float(text)


def _load_graph(path: str) -> DefiningGraph:
    with open(path, "r", encoding="utf-8") as handle:
        return DefiningGraph.from_json(handle.read())


def _load_realization(source: str, graph: DefiningGraph) -> Realization:
    if source == "std":
        realization = build_standard_realization(graph)
    else:
        with open(source, "r", encoding="utf-8") as handle:
            realization = Realization.from_json(handle.read())
        if realization.graph != graph:
            raise RaagError("realization graph differs from --graph")
    validate_realization(realization)
    return realization


def _emit(text: str) -> None:
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def _emit_json(obj) -> None:
    _emit(json.dumps(obj, indent=2))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="raagmcg",
        description=(
            "Syllable normal forms in right-angled Artin groups and the "
            "Thurston types of their mapping class images."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)
    cap = _default_cap()

    def word_command(name: str, help_text: str, formats: list[str], default_format: str):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--graph", required=True, help="path to a graph JSON file")
        p.add_argument("--word", required=True, help="word in the token grammar")
        p.add_argument("--min-cap", type=int, default=cap, dest="min_cap")
        p.add_argument("--search-cap", type=int, default=cap, dest="search_cap")
        p.add_argument("--format", choices=formats, default=default_format)
        return p

    word_command("normalize", "canonical minimal-syllable form", ["text", "json"], "text")
    word_command("min-enum", "all minimal representatives", ["text", "json"], "json")
    word_command("order", "syllable partial order", ["dot", "json"], "dot")
    word_command("reduce", "conjugacy-minimal form and conjugator", ["text", "json"], "json")
    word_command("oracle", "exhaustive minimal syllable count", ["text", "json"], "text")

    p = sub.add_parser("realize", help="build or validate a realization")
    p.add_argument("--graph", required=True)
    p.add_argument("--realization", default="std", help='"std" or a path to a realization JSON')
    p.add_argument("--format", choices=["json", "dot"], default="json")

    p = word_command("classify", "Thurston type report", ["json"], "json")
    p.add_argument("--realization", default="std")

    p = word_command("verify", "brute-force checks of the power structure", ["json"], "json")
    p.add_argument("--realization", default="std")

    p = word_command("certify", "quasi-isometry lower-bound certificate", ["json"], "json")
    p.add_argument("--k0", type=_number, default=10)
    p.add_argument("--d", type=_number, default=6)
    p.add_argument("--a", type=_number, default=2)
    p.add_argument("--b", type=_number, default=10)
    p.add_argument("--k", type=_number, default=None, help="explicit K override")
    return parser


def run(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph)
    command = args.command
    if command == "realize":
        realization = _load_realization(args.realization, graph)
        if args.format == "dot":
            _emit(graph.to_dot("gamma") + graph.complement().to_dot("gamma_complement"))
        else:
            _emit_json(realization.to_json_dict())
        return 0

    word = parse_word(args.word, graph)
    if command == "normalize":
        result = normalize(word)
        if args.format == "json":
            _emit_json({"input": str(word), "normalized": str(result)})
        else:
            _emit(str(result))
    elif command == "min-enum":
        reps = minimal_representatives(word, args.min_cap)
        if args.format == "json":
            _emit_json(
                {"word": str(normalize(word)), "count": len(reps),
                 "members": [str(r) for r in reps]}
            )
        else:
            _emit("\n".join(str(r) for r in reps))
    elif command == "order":
        order = syllable_order(word, args.min_cap)
        if args.format == "json":
            _emit_json(order.to_json_dict())
        else:
            _emit(order.to_dot())
    elif command == "reduce":
        reduced, conjugator = cyclically_reduce(word, args.min_cap)
        if args.format == "json":
            _emit_json(
                {"input": str(word), "reduced": str(reduced), "conjugator": str(conjugator)}
            )
        else:
            _emit(f"reduced: {reduced}\nconjugator: {conjugator}")
    elif command == "oracle":
        count = oracle_min_syllables(word, args.search_cap)
        if args.format == "json":
            _emit_json({"word": str(word), "min_syllables": count})
        else:
            _emit(str(count))
    elif command == "classify":
        realization = _load_realization(args.realization, graph)
        report = classify(word, realization, args.min_cap)
        _emit_json(report.to_json_dict())
    elif command == "verify":
        realization = _load_realization(args.realization, graph)
        report = verify_power_properties(
            word, args.min_cap, realization, oracle_budget=args.search_cap
        )
        _emit_json({"word": str(normalize(word)), "checks": report})
    elif command == "certify":
        constants = Constants.create(
            graph, k0=args.k0, d=args.d, a=args.a, b=args.b, k=args.k
        )
        certificate = make_certificate(word, constants)
        _emit_json(certificate.to_json_dict())
    else:  # pragma: no cover
        raise AssertionError(command)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args)
    except RaagError as err:
        _emit_json(err.to_json_dict())
        return 1
    except (OSError, ValueError, json.JSONDecodeError) as err:
        _emit_json({"error": type(err).__name__, "message": str(err), "details": {}})
        return 1


if __name__ == "__main__":
    sys.exit(main())
