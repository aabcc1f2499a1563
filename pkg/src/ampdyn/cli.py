"""Command-line front end.

Exit status: 0 on success (whatever the verdict), 2 for malformed input or
usage errors, 3 when the input is well-formed but mathematically degenerate
(singular, not expanding, not invariant, ...).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import corpus
from .classify import classify, compose_min_power
from .cones import PolyCone, contains, orbit_cone_witness, verify_pf_lemma
from .errors import (
    AmpdynError,
    ConeDegenerateError,
    HypothesisNotMetError,
    NotIntAmplifiedError,
    NotInvariantError,
    SingularMatrixError,
    SpectrumNotExpandingError,
    ZeroPolynomialError,
)
from .matrices import char_poly
from .nspullback import CMEndo, EndoAction, ns_pullback
from .roots import root_balls

DEGENERATE = (
    SingularMatrixError,
    SpectrumNotExpandingError,
    NotInvariantError,
    ConeDegenerateError,
    NotIntAmplifiedError,
    HypothesisNotMetError,
    ZeroPolynomialError,
)

EXIT_OK, EXIT_INPUT, EXIT_DEGENERATE = 0, 2, 3


class InputError(Exception):
    pass


def _precision(text: str) -> int:
    try:
        bits = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if not 2 <= bits <= 4096:
        raise argparse.ArgumentTypeError("precision must lie in [2, 4096]")
    return bits


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_INPUT)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ampdyn", description="Exact spectral and cone checks for pullback actions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text, needs_input=True):
        p = sub.add_parser(name, help=help_text)
        if needs_input:
            src = p.add_mutually_exclusive_group(required=True)
            src.add_argument("--input", metavar="PATH", help="read JSON from a file ('-' for stdin)")
            src.add_argument("--json", metavar="INLINE", help="inline JSON document")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--precision", type=_precision, default=64, metavar="BITS",
                       help="bits for validated root enclosures (2..4096, default 64)")
        return p

    add("classify", "classify an N^1 action or a CM endomorphism")
    add("build-ns", "pullback matrix of a CM endomorphism")
    add("compose", 'norm certificate for {"f": ..., "g": ...}')
    add("cone-check", 'membership and invariant-cone lemma for {"cone", "phi"?, "point"?, "strict"?}')
    add("orbit-witness", 'orbit-cone witness for {"phi", "v", "m_max"?}')
    ex = add("examples", "run the bundled worked cases", needs_input=False)
    ex.add_argument("--case", metavar="ID", help=f"one of {', '.join(corpus.CASES)}")
    return parser


def _load(args) -> object:
    try:
        if args.json is not None:
            return json.loads(args.json)
        if args.input == "-":
            return json.load(sys.stdin)
        with open(args.input, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {args.input}: {exc.strerror}")
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}")


def _require(obj, key):
    if not isinstance(obj, dict) or key not in obj:
        raise InputError(f"missing key {key!r}")
    return obj[key]


def _parse_action(obj) -> EndoAction | CMEndo:
    if not isinstance(obj, dict):
        raise InputError("expected a JSON object")
    if "matrix" in obj and "d" in obj:
        return CMEndo.from_json(obj)
    if "entries" in obj:
        return EndoAction.from_json(obj)
    raise InputError("expected an EndoAction {rows, cols, entries} or a CMEndo {d, matrix}")


def _as_action(x) -> EndoAction:
    return ns_pullback(x) if isinstance(x, CMEndo) else x


def cmd_classify(args, doc) -> dict:
    action = _as_action(_parse_action(doc))
    out = classify(action).to_json()
    out["provenance"] = action.provenance
    out["root_balls"] = [rb.to_json() for rb in root_balls(char_poly(action.mat), args.precision)]
    return out


def cmd_build_ns(args, doc) -> dict:
    e = _parse_action(doc)
    if not isinstance(e, CMEndo):
        raise InputError("build-ns needs a CMEndo {d, matrix}")
    return ns_pullback(e).to_json()


def cmd_compose(args, doc) -> dict:
    f = _as_action(_parse_action(_require(doc, "f")))
    g = _as_action(_parse_action(_require(doc, "g")))
    return compose_min_power(f, g).to_json()


def cmd_cone_check(args, doc) -> dict:
    cone = PolyCone.from_json(_require(doc, "cone"))
    out: dict = {"cone": cone.to_json(), "full_dimensional": cone.full_dimensional, "pointed": cone.pointed}
    if "point" in doc:
        strict = doc.get("strict", False)
        if not isinstance(strict, bool):
            raise InputError("'strict' must be a boolean")
        out["membership"] = contains(cone, _require(doc, "point"), strict=strict).to_json()
    if "phi" in doc:
        phi = _as_action(_parse_action(doc["phi"]))
        out["pf_lemma"] = verify_pf_lemma(phi, cone).to_json()
    return out


def cmd_orbit_witness(args, doc) -> dict:
    phi = _as_action(_parse_action(_require(doc, "phi")))
    v = _require(doc, "v")
    if not isinstance(v, list):
        raise InputError("'v' must be a list")
    m_max = doc.get("m_max", 64)
    if not isinstance(m_max, int) or isinstance(m_max, bool) or m_max <= 0:
        raise InputError("'m_max' must be a positive integer")
    return orbit_cone_witness(phi, v, m_max).to_json()


COMMANDS = {
    "classify": cmd_classify,
    "build-ns": cmd_build_ns,
    "compose": cmd_compose,
    "cone-check": cmd_cone_check,
    "orbit-witness": cmd_orbit_witness,
}


def _text(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    for key in sorted(obj):
        val = obj[key]
        if isinstance(val, dict):
            lines.append(f"{pad}{key}:")
            lines.extend(_text(val, indent + 1))
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{pad}{key}:")
            for item in val:
                lines.append(f"{pad}  -")
                lines.extend(_text(item, indent + 2))
        else:
            lines.append(f"{pad}{key}: {json.dumps(val)}")
    return lines


def emit(obj: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True, indent=2))
    else:
        print("\n".join(_text(obj)))


def run_examples(args) -> int:
    if args.case is not None and args.case not in corpus.CASES:
        print(f"unknown case {args.case!r}; known: {', '.join(corpus.CASES)}", file=sys.stderr)
        return EXIT_INPUT
    results = corpus.run_cases(args.case)
    ok = all(passed for _, _, passed in results)
    if args.format == "json":
        emit({"all_passed": ok,
              "checks": [{"case": c, "check": n, "passed": p} for c, n, p in results]}, "json")
    else:
        for c, n, p in results:
            print(f"{'PASS' if p else 'FAIL'}  {c}  {n}")
        print(f"{sum(p for *_, p in results)}/{len(results)} passed")
    return EXIT_OK if ok else 1


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "examples":
        return run_examples(args)
    try:
        doc = _load(args)
        result = COMMANDS[args.command](args, doc)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DEGENERATE as exc:
        print(f"degenerate input: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except AmpdynError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    emit(result, args.format)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
