"""Command-line front end.

Morphism arguments may be inline JSON, a path to a JSON file, ``-`` for
stdin, or a shorthand: ``id:WORD``, ``eta:WORD``, ``eps:WORD``,
``sym:WORD,WORD`` or ``perm:2,1,3``.  ``compose`` takes its arguments in
diagrammatic order (first applied first); the library call
``compose(h, g)`` is applicative.

Exit codes: 0 success, 1 law failure, 2 input or typing error, 3 resource bound.
"""

from __future__ import annotations

import argparse
import json
import string
import sys
from pathlib import Path
from typing import Sequence

from .algebra import (
    cir_formula,
    dual_morphism,
    epsilon,
    eta,
    identity,
    symmetry,
    tensor_morphisms,
    trace_composition,
)
from .diagrams import DiagMorphism, Endpoint, Side, enumerate_pairings, parse_object
from .errors import BoundaryMismatchError, CobordiaError, ParseError, ResourceBoundError
from .evaluation import DEFAULT_MAX_LEGS, evaluate
from .fsm import include
from .laws import SUITES, any_failed, run_suite
from .semiring import SEMIRINGS, get_semiring
from .serialize import array_to_json, dumps, dumps_morphism, morphism_from_json, permutation_from_json

__all__ = ["main", "build_parser", "load_morphism", "render_dot", "render_ascii"]

EXIT_OK, EXIT_LAW, EXIT_INPUT, EXIT_BOUND = 0, 1, 2, 3


def _shorthand(text: str) -> DiagMorphism | None:
    kind, sep, arg = text.partition(":")
    if not sep or kind not in ("id", "eta", "eps", "sym", "perm"):
        return None
    if kind == "sym":
        left, comma, right = arg.partition(",")
        if not comma:
            raise ParseError(f"sym needs two words separated by a comma, got {arg!r}")
        return symmetry(parse_object(left), parse_object(right))
    if kind == "perm":
        return include(permutation_from_json("[" + arg + "]"))
    return {"id": identity, "eta": eta, "eps": epsilon}[kind](parse_object(arg))


def load_morphism(arg: str) -> DiagMorphism:
    short = _shorthand(arg)
    if short is not None:
        return short
    if arg == "-":
        return morphism_from_json(sys.stdin.read())
    if arg.lstrip().startswith("{"):
        return morphism_from_json(arg)
    path = Path(arg)
    if not path.is_file():
        raise ParseError(f"{arg!r} is neither inline JSON, a shorthand, nor a readable file")
    return morphism_from_json(path.read_text(encoding="utf-8"))


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def cmd_compose(args: argparse.Namespace) -> int:
    ms = [load_morphism(a) for a in args.morphisms]
    out = ms[0]
    diagnostics = []
    for i, h in enumerate(ms[1:], start=2):
        if out.cod != h.dom:
            raise BoundaryMismatchError(out.cod, h.dom, what=f"codomain of step {i - 1} vs domain of step {i}")
        tr = trace_composition(h, out)
        diagnostics.append((i, tr.closed_loops, cir_formula(h, out)))
        out = tr.composite
    print(dumps_morphism(out))
    if args.show_circles:
        for step, traced, formula in diagnostics:
            print(f"step {step}: traced_loops={traced} cir_formula={formula}", file=sys.stderr)
    return EXIT_OK


def cmd_tensor(args: argparse.Namespace) -> int:
    ms = [load_morphism(a) for a in args.morphisms]
    out = ms[0]
    for m in ms[1:]:
        out = tensor_morphisms(out, m)
    print(dumps_morphism(out))
    return EXIT_OK


def cmd_dual(args: argparse.Namespace) -> int:
    print(dumps_morphism(dual_morphism(load_morphism(args.morphism))))
    return EXIT_OK


def cmd_eval(args: argparse.Namespace) -> int:
    m = load_morphism(args.morphism)
    arr = evaluate(m, args.dim, get_semiring(args.semiring), max_legs=args.max_legs)
    data = array_to_json(arr)
    if arr.is_scalar():
        print(dumps(data["entries"][0]))
    elif args.format == "nested":
        print(dumps(_nested(data["entries"], arr.dim, arr.rank)))
    else:
        print(dumps(data))
    return EXIT_OK


def _nested(flat: list, d: int, rank: int) -> list:
    if rank == 1:
        return list(flat)
    step = len(flat) // d
    return [_nested(flat[i * step:(i + 1) * step], d, rank - 1) for i in range(d)]


def cmd_enumerate(args: argparse.Namespace) -> int:
    dom, cod = parse_object(args.source), parse_object(args.target)
    pairings = enumerate_pairings(dom, cod)
    print(len(pairings))
    for p in pairings:
        print(dumps_morphism(DiagMorphism(dom, cod, p, 0)))
    return EXIT_OK


def cmd_laws(args: argparse.Namespace) -> int:
    names = list(SUITES) if not args.suites or args.suites == ["all"] else args.suites
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise ParseError(f"unknown suite(s) {', '.join(unknown)}; choose from {', '.join(SUITES)}")
    reports = []
    for name in names:
        reports.extend(run_suite(name, args.max_len, args.max_circles, args.seed))
    for r in reports:
        print(r.to_json())
    return EXIT_LAW if any_failed(reports) else EXIT_OK


def render_dot(m: DiagMorphism) -> str:
    lines = ["graph morphism {", f'  label="circles={m.circles}";', "  rankdir=BT;"]
    for side, word, prefix in (("dom", m.dom, "d"), ("cod", m.cod, "c")):
        if len(word):
            lines.append(f"  subgraph {side} {{")
            lines.append("    rank=same;")
            for i, o in enumerate(word, start=1):
                lines.append(f'    {prefix}{i} [label="{prefix}{i} {o.value}"];')
            lines.append("  }")
    for s in m.pairing.canonical():
        lines.append(f"  {s.a} -- {s.b};")
    lines.append("}")
    return "\n".join(lines)


def _strand_labels(n: int) -> list[str]:
    letters = string.ascii_lowercase
    return [letters[i] if i < 26 else f"{letters[i // 26 - 1]}{letters[i % 26]}" for i in range(n)]


def render_ascii(m: DiagMorphism) -> str:
    """Codomain row above domain row; points sharing a letter are joined by a strand."""
    strands = list(m.pairing.canonical())
    labels = dict(zip(strands, _strand_labels(len(strands))))
    tag = {}
    for s, label in labels.items():
        tag[s.a] = tag[s.b] = label
    width = max([2] + [len(x) for x in labels.values()]) + 1

    def row(word, side: int) -> tuple[str, str]:
        signs = "".join(o.value.rjust(width) for o in word)
        marks = "".join(tag[Endpoint(Side(side), i)].rjust(width) for i in range(1, len(word) + 1))
        return signs, marks

    cod_signs, cod_marks = row(m.cod, 1)
    dom_signs, dom_marks = row(m.dom, 0)
    lines = [f"cod |{cod_signs}", f"    |{cod_marks}", "    |", f"    |{dom_marks}", f"dom |{dom_signs}",
             f"circles: {m.circles}"]
    return "\n".join(line.rstrip() for line in lines)


def cmd_render(args: argparse.Namespace) -> int:
    m = load_morphism(args.morphism)
    print(render_dot(m) if args.format == "dot" else render_ascii(m))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cobordia", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("compose", help="compose morphisms in diagrammatic order (first applied first)")
    p.add_argument("morphisms", nargs="+")
    p.add_argument("--show-circles", action="store_true",
                   help="print traced loops and the section-count formula per step to stderr")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("tensor", help="tensor morphisms left to right")
    p.add_argument("morphisms", nargs="+")
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("dual", help="dual of a morphism")
    p.add_argument("morphism")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("eval", help="evaluate a morphism as an array")
    p.add_argument("morphism")
    p.add_argument("--dim", type=_positive_int, required=True)
    p.add_argument("--semiring", choices=sorted(SEMIRINGS), default="int")
    p.add_argument("--format", choices=("json", "nested"), default="json")
    p.add_argument("--max-legs", type=_natural, default=DEFAULT_MAX_LEGS)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("enumerate", help="list all total pairings between two objects")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("laws", help="run law suites, one JSON report per line")
    p.add_argument("suites", nargs="*", help=f"suite names or 'all' ({', '.join(SUITES)})")
    p.add_argument("--max-len", type=_natural, default=None)
    p.add_argument("--max-circles", type=_natural, default=1)
    p.add_argument("--seed", type=_natural, default=0)
    p.set_defaults(func=cmd_laws)

    p = sub.add_parser("render", help="render a morphism as DOT or ASCII")
    p.add_argument("morphism")
    p.add_argument("--format", choices=("dot", "ascii"), default="dot")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceBoundError as exc:
        print(f"cobordia: resource bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (CobordiaError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"cobordia: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
