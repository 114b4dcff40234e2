"""Command-line front end.

Exit codes: 0 success, 1 parse or validation error, 2 shape/genus mismatch,
3 non-generic graph where genericity is required, 4 internal invariant
violation (including any failure found by ``verify``).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import divisors as dv
from .documents import Document, dumps, loads
from .errors import InvariantViolation, NonGenericGraphError, ShapeMismatchError
from .graph_core import ChainOfLoops, default_chain, is_generic, make_chain
from .paths import path_to_tableau, tableau_to_path
from .render import render
from .tableaux import DEFAULT_CEILING, enumerate_tableaux, evacuate, hook_count, transpose
from .verify import verify_sweep

EXIT_OK, EXIT_INPUT, EXIT_SHAPE, EXIT_NONGENERIC, EXIT_INVARIANT = 0, 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INPUT):
        super().__init__(message)
        self.code = code


def _read(path: Optional[str]) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_graph(args, genus: int) -> ChainOfLoops:
    if args.graph is None:
        return default_chain(genus)
    doc = loads(_read(args.graph))
    if doc.kind != "graph":
        raise CliError(f"--graph expects a graph document, got {doc.kind}")
    if doc.payload.genus != genus:
        raise CliError(f"graph has genus {doc.payload.genus}, input needs {genus}", EXIT_SHAPE)
    return doc.payload


def _expect(doc: Document, *kinds: str) -> None:
    if doc.kind not in kinds:
        raise CliError(f"expected a {' or '.join(kinds)} document, got {doc.kind}")


def _underline(doc: Document) -> dv.UnderlineSeq:
    payload = doc.payload
    if isinstance(payload, dv.UnderlineSeq):
        return payload
    return dv.raw_to_underline(payload)


def _raw(doc: Document) -> dv.DivisorSeq:
    payload = doc.payload
    return dv.underline_to_raw(payload) if isinstance(payload, dv.UnderlineSeq) else payload


# ---------------------------------------------------------------------------
# commands


def cmd_convert(doc: Document, target: str, args) -> Document:
    if doc.kind == target:
        return doc
    if doc.kind == "tableau" and target == "path":
        return Document("path", tableau_to_path(doc.payload))
    if doc.kind == "path" and target == "tableau":
        return Document("tableau", path_to_tableau(doc.payload))
    if doc.kind == "tableau" and target == "divisor":
        graph = _load_graph(args, doc.payload.size)
        return Document("divisor", dv.phi(doc.payload, graph))
    if doc.kind == "path" and target == "divisor":
        graph = _load_graph(args, doc.payload.g)
        return Document("divisor", dv.alpha(doc.payload, graph))
    if doc.kind == "divisor" and target == "path":
        raw = _raw(doc)
        if not is_generic(raw.graph):
            raise NonGenericGraphError("divisor-to-path conversion needs a generic graph")
        under = _underline(doc)
        if under.head == 0:
            return Document("path", dv.path_of(under))
        return Document("path", dv.rho(raw, under.head))
    raise CliError(f"no conversion from {doc.kind} to {target}")


def cmd_rank(doc: Document) -> dict:
    _expect(doc, "divisor")
    raw = _raw(doc)
    r = dv.rank(raw)
    witness = dv.witness_path(raw)
    out = {"rank": r, "witness": None}
    if witness is not None:
        out["witness"] = {"kind": "path", "r": witness.r, "points": [list(p) for p in witness.points]}
    return out


def cmd_transform(doc: Document, op: str) -> Document:
    if op in ("evacuate", "transpose"):
        _expect(doc, "tableau")
        fn = evacuate if op == "evacuate" else transpose
        return Document("tableau", fn(doc.payload))
    _expect(doc, "divisor")
    c = _underline(doc)
    if not is_generic(c.graph):
        raise NonGenericGraphError(f"{op} needs a generic graph")
    dv.path_of(c)
    if op == "reflect":
        return Document("divisor", dv.reflect_divisor(c), {"graph": "reflected"})
    if op == "dual":
        return Document("divisor", dv.dual_reduce(c), {"graph": "same", "of": "K - c"})
    raise CliError(f"unknown transform {op}")


def cmd_render(doc: Document, style: Optional[str]) -> str:
    if doc.kind not in ("path", "divisor"):
        raise CliError(f"cannot render a {doc.kind} document")
    return render(doc.payload, style)


_TEMPLATE = re.compile(r"^\s*(\d*)\s*g\s*(?:([+-])\s*(\d+))?\s*$")


def parse_template_value(text: str) -> Callable[[int], Fraction]:
    """``"10"``, ``"7/3"`` or an affine expression in the genus such as
    ``"2g"`` or ``"2g+1"``."""
    match = _TEMPLATE.match(text)
    if match:
        coeff = int(match.group(1) or 1)
        offset = int(match.group(3) or 0) * (-1 if match.group(2) == "-" else 1)
        return lambda g: Fraction(coeff * g + offset)
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"bad template value {text!r}") from exc
    return lambda g: value


def _template(args) -> Callable[[int], ChainOfLoops]:
    if args.template is not None:
        ell, m = (parse_template_value(t) for t in args.template)
        return lambda g: make_chain([(ell(g), m(g))] * g)
    if args.graph is not None:
        doc = loads(_read(args.graph))
        if doc.kind != "graph":
            raise CliError("--graph expects a graph document")
        loops = doc.payload.loops
        if len(loops) != 1:
            raise CliError("verify takes a one-loop graph as a template repeated for every genus")
        return lambda g: ChainOfLoops(loops * g)
    return default_chain


def cmd_verify(args) -> tuple[str, int]:
    if args.ceiling < 1:
        raise CliError("ceiling must be at least 1")
    if args.ceiling > args.max_ceiling:
        raise CliError(f"ceiling {args.ceiling} exceeds the configured maximum {args.max_ceiling}")
    make_graph = _template(args)
    for g in range(1, args.ceiling + 1):
        if not is_generic(make_graph(g)):
            raise NonGenericGraphError(f"template graph is not generic at genus {g}")
    report = verify_sweep(args.ceiling, make_graph, workers=args.workers)
    lines = []
    for shape in report.shapes:
        expected = hook_count(shape.m, shape.n)
        lines.append(
            f"shape {shape.m}x{shape.n}: {shape.count} tableaux (hook count {expected}), "
            f"{len(shape.failures)} failures"
        )
        for failure in shape.failures:
            lines.append(f"  FAIL {failure}")
    lines.append(f"total: {report.total} tableaux, {report.failure_count} failures")
    return "\n".join(lines) + "\n", (EXIT_OK if report.failure_count == 0 else EXIT_INVARIANT)


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropchain",
        description="Rectangular tableaux and divisors on chain-of-loops graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, input_arg: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        if input_arg:
            p.add_argument("input", nargs="?", help="input document (default: stdin)")
        p.add_argument("--out", help="output file (default: stdout)")
        return p

    p = add("convert", "convert between tableau, path and divisor documents")
    p.add_argument("--to", required=True, choices=["tableau", "path", "divisor"])
    p.add_argument("--graph", help="graph document (default: ell_i = 2g, m_i = 1)")

    add("rank", "rank of a divisor and the witnessing lattice path")
    for name, text in [
        ("evacuate", "evacuate a tableau"),
        ("transpose", "transpose a tableau"),
        ("reflect", "reflect a tableau-image divisor to the reversed chain"),
        ("dual", "v0-reduced representative of K - c for a tableau-image divisor"),
    ]:
        add(name, text)

    p = add("verify", "exhaustively check the tableau/divisor correspondences", input_arg=False)
    p.add_argument("--ceiling", type=int, default=12, help="largest genus checked (default 12)")
    p.add_argument("--max-ceiling", type=int, default=DEFAULT_CEILING, help=argparse.SUPPRESS)
    p.add_argument("--graph", help="one-loop graph document used for every loop")
    p.add_argument("--template", nargs=2, metavar=("ELL", "M"), help="loop lengths, e.g. 2g 1")
    p.add_argument("--workers", type=int, default=1)

    p = add("enumerate", "list every tableau of a shape as JSON lines", input_arg=False)
    p.add_argument("--shape", nargs=2, type=int, metavar=("M", "N"), required=True)
    p.add_argument("--ceiling", type=int, default=DEFAULT_CEILING)

    p = add("render", "SVG drawing of a path or divisor document")
    p.add_argument("--style", choices=["chip-config", "lattice-path"])
    return parser


def _run(args) -> tuple[str, int]:
    if args.command == "verify":
        return cmd_verify(args)
    if args.command == "enumerate":
        m, n = args.shape
        docs = (dumps(Document("tableau", t)) for t in enumerate_tableaux(m, n, args.ceiling))
        return "".join(d + "\n" for d in docs), EXIT_OK
    doc = loads(_read(args.input))
    if args.command == "convert":
        return dumps(cmd_convert(doc, args.to, args)) + "\n", EXIT_OK
    if args.command == "rank":
        return json.dumps(cmd_rank(doc)) + "\n", EXIT_OK
    if args.command in ("evacuate", "transpose", "reflect", "dual"):
        return dumps(cmd_transform(doc, args.command)) + "\n", EXIT_OK
    if args.command == "render":
        return cmd_render(doc, args.style), EXIT_OK
    raise CliError(f"unknown command {args.command}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text, code = _run(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ShapeMismatchError as exc:
        print(f"shape mismatch: {exc}", file=sys.stderr)
        return EXIT_SHAPE
    except NonGenericGraphError as exc:
        print(f"non-generic graph: {exc}", file=sys.stderr)
        return EXIT_NONGENERIC
    except InvariantViolation as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
