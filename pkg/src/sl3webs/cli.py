"""Command-line front end.

Every positional input may be a file path, ``-`` for stdin, or an inline
literal such as ``"1 2 / 3 4 / 5 6"``.  Exit status is 0 on success, 1 on a
domain, parse or usage error, and 2 when a verification suite fails.
"""
from __future__ import annotations

import argparse
import os
import re
import sys

from . import mdiagram as md
from . import webmap as wm
from .errors import ParseError, UnknownSubcommand, UsageError, WebsError
from .mdiagram import MDiagram, format_mdiagram, from_tableau, parse_mdiagram
from .render import render_svg
from .tableau import Shape, StandardTableau, count_standard, enumerate_standard, format_tableau, parse_tableau, promote, shuffle
from .verify import SLIDE_RULES, SUITES, run_suite
from .webmap import Web, format_web, parse_web

SHAPE_HELP = (
    "shape as RxC (e.g. 3x4 for three rows of four) or a comma list of row "
    "lengths from the bottom row up (e.g. 3,3,2)"
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_shape(spec: str) -> Shape:
    spec = spec.strip()
    if m := re.fullmatch(r"(\d+)\s*[xX]\s*(\d+)", spec):
        return Shape.rectangle(int(m[1]), int(m[2]))
    if re.fullmatch(r"\d+(\s*,\s*\d+)*", spec):
        return Shape(tuple(int(x) for x in spec.split(",")))
    raise ParseError(f"cannot read shape {spec!r}; {SHAPE_HELP}", 1, 1)


def _read(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    if os.path.isfile(source):
        with open(source, encoding="utf-8") as fh:
            return fh.read()
    return source


def load(source: str) -> StandardTableau | MDiagram | Web:
    """Read a tableau, m-diagram or web, telling them apart by their text format."""
    text = _read(source)
    body = [line.strip() for line in text.splitlines() if line.strip()]
    if body and body[0].startswith("N="):
        if all(line.startswith("arc") for line in body[1:]):
            return parse_mdiagram(text)
        return parse_web(text)
    return parse_tableau(text.strip())


def _tableau(source: str) -> StandardTableau:
    obj = load(source)
    if not isinstance(obj, StandardTableau):
        raise ParseError("expected a tableau such as '1 2 / 3 4 / 5 6'", 1, 1)
    return obj


def _web(source: str) -> Web:
    obj = load(source)
    if isinstance(obj, StandardTableau):
        return wm.web_of(obj)
    if isinstance(obj, MDiagram):
        return wm.resolve(obj)
    return obj


def _emit(args, text: str):
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sl3webs", description="Three-row tableaux, m-diagrams and sl3 webs.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser, metavar="command")

    def cmd(name, help_text):
        c = sub.add_parser(name, help=help_text, description=help_text)
        c.add_argument("-o", "--output", help="write to this file instead of stdout")
        return c

    cmd("tab2m", "m-diagram of a tableau").add_argument("tableau")
    cmd("tab2web", "resolved web of a tableau").add_argument("tableau")
    c = cmd("web2tab", "depth map of a web (tableau, m-diagram or web input)")
    c.add_argument("web")
    c.add_argument("--extended", action="store_true", help="allow boundary sinks (shape n,k,k)")
    cmd("promote", "jeu de taquin promotion").add_argument("tableau")
    c = cmd("rotate", "rotate a web: label 1 moves to N, the rest drop by one")
    c.add_argument("web")
    c.add_argument("--canonical", action="store_true", help="print the canonical token line")
    c = cmd("shuffle", "shuffle INNER into OUTER after position --at")
    c.add_argument("inner")
    c.add_argument("outer")
    c.add_argument("--at", type=int, required=True)
    c = cmd("join", "slip INNER into the boundary of OUTER after label --at")
    c.add_argument("outer")
    c.add_argument("inner")
    c.add_argument("--at", type=int, required=True)
    c.add_argument("--canonical", action="store_true", help="print the canonical token line")
    cmd("enumerate", "list all standard tableaux of a shape").add_argument("--shape", required=True, help=SHAPE_HELP)
    cmd("count", "number of standard tableaux of a shape").add_argument("--shape", required=True, help=SHAPE_HELP)
    c = cmd("verify", "run a property suite")
    c.add_argument("--suite", required=True, choices=SUITES + ("all",))
    c.add_argument("--n", type=int, help="rectangle width, box bound for slides, or n for extended")
    c.add_argument("--k", type=int, help="k for the extended suite on shape (n,k,k)")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--trials", type=int, default=200)
    c.add_argument("--rule", choices=SLIDE_RULES, default="stated", help="arc rule for the slides suite")
    c = cmd("render", "draw a tableau's web, an m-diagram or a web")
    c.add_argument("object")
    c.add_argument("--format", choices=("svg",), default="svg")
    c.add_argument("--depths", action="store_true", help="label faces with their depth")
    c.add_argument("--mdiagram", action="store_true", help="draw a tableau's m-diagram instead of its web")
    return p


def dispatch(args) -> int:
    c = args.command
    if c == "tab2m":
        _emit(args, format_mdiagram(from_tableau(_tableau(args.tableau))))
    elif c == "tab2web":
        _emit(args, format_web(wm.web_of(_tableau(args.tableau))))
    elif c == "web2tab":
        w = _web(args.web)
        t = wm.extended_depth_map(w) if args.extended else wm.depth_map(w)
        _emit(args, format_tableau(t))
    elif c == "promote":
        _emit(args, format_tableau(promote(_tableau(args.tableau))))
    elif c == "rotate":
        w = wm.rotate(_web(args.web))
        _emit(args, " ".join(wm.canonical_form(w)) if args.canonical else format_web(w))
    elif c == "shuffle":
        _emit(args, format_tableau(shuffle(_tableau(args.inner), args.at, _tableau(args.outer))))
    elif c == "join":
        outer, inner = load(args.outer), load(args.inner)
        if isinstance(outer, MDiagram) and isinstance(inner, MDiagram):
            _emit(args, format_mdiagram(md.join(outer, args.at, inner)))
        else:
            w = wm.join(_web(args.outer), args.at, _web(args.inner))
            _emit(args, " ".join(wm.canonical_form(w)) if args.canonical else format_web(w))
    elif c == "enumerate":
        _emit(args, "\n".join(format_tableau(t) for t in enumerate_standard(parse_shape(args.shape))))
    elif c == "count":
        _emit(args, str(count_standard(parse_shape(args.shape))))
    elif c == "verify":
        report = run_suite(args.suite, n=args.n, k=args.k, seed=args.seed, trials=args.trials, rule=args.rule)
        _emit(args, str(report))
        return 0 if report.passed else 2
    elif c == "render":
        obj = load(args.object)
        if isinstance(obj, StandardTableau):
            obj = from_tableau(obj) if args.mdiagram else wm.web_of(obj)
        _emit(args, render_svg(obj, depths=args.depths))
    else:
        raise UnknownSubcommand(f"unknown subcommand {c!r}")
    return 0


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        if not argv:
            parser.print_help(sys.stderr)
            raise UsageError("a subcommand is required")
        commands = parser._subparsers._group_actions[0].choices
        if not argv[0].startswith("-") and argv[0] not in commands:
            raise UnknownSubcommand(f"unknown subcommand {argv[0]!r}; choose from {', '.join(commands)}")
        return dispatch(parser.parse_args(argv))
    except WebsError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


run = main

if __name__ == "__main__":
    sys.exit(main())
