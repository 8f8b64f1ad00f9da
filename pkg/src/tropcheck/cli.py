"""The tropcheck command line tool.

Subcommands: analyze | polytope | faces | plot | oracle.  Exit codes are
operational only: 0 whatever the mathematical verdicts, 2 for malformed
input, 3 for an operation the input shape does not support, 4 when an
enumeration bound is exceeded.  Verdicts live in the payload; --format
picks JSON or a line-per-field text rendering of the same data.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import (
    is_idempotent,
    is_projective,
    rank_report,
    regularity_witness,
)
from .cells import DEFAULT_MAX_TUPLES, cell_complex
from .documents import (
    entry_to_json,
    matrix_from_document,
    matrix_to_document,
    polytope_from_document,
)
from .errors import (
    DimensionMismatch,
    EmptyPolytope,
    MalformedDocument,
    NonFiniteEntries,
    NotFullRank,
    NotIdempotent,
    NotSquare,
    ScaleLimitExceeded,
)
from .oracles import SUITES, run_suite
from .polytopes import column_space, row_space
from .svgplot import render_polytope_svg

EXIT_OK = 0
EXIT_MALFORMED = 2
EXIT_UNSUPPORTED = 3
EXIT_SCALE = 4


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(text)


def _load_json(path: str):
    try:
        return json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise MalformedDocument(f"invalid JSON: {exc}") from None


def _is_scalar_list(value) -> bool:
    return isinstance(value, list) and all(not isinstance(v, (dict, list)) for v in value)


def _render_text(data, indent: int = 0) -> str:
    lines = []
    pad = "  " * indent
    if isinstance(data, dict):
        for key, value in data.items():
            if _is_scalar_list(value) or not isinstance(value, (dict, list)):
                lines.append(f"{pad}{key}: {_render_scalar(value)}")
            elif value:
                lines.append(f"{pad}{key}:")
                lines.append(_render_text(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_render_scalar(value)}")
        return "\n".join(lines)
    if isinstance(data, list):
        for value in data:
            if _is_scalar_list(value) or not isinstance(value, (dict, list)):
                lines.append(f"{pad}- {_render_scalar(value)}")
            elif value:
                lines.append(f"{pad}-")
                lines.append(_render_text(value, indent + 1))
            else:
                lines.append(f"{pad}- {_render_scalar(value)}")
        return "\n".join(lines)
    return f"{pad}{_render_scalar(data)}"


def _render_scalar(value) -> str:
    if value is True:
        return "true"
    if value is False:
        return "false"
    if value is None:
        return "null"
    if isinstance(value, list):
        return "[" + ", ".join(_render_scalar(v) for v in value) + "]"
    if isinstance(value, dict) and not value:
        return "{}"
    return str(value)


def _emit(args, payload) -> None:
    if args.format == "json":
        text = json.dumps(payload, indent=2) + "\n"
    else:
        text = _render_text(payload) + "\n"
    _write_text(args.output, text)


def _cmd_analyze(args) -> int:
    matrix = matrix_from_document(_load_json(args.input))
    square = matrix.is_square
    finite = matrix.is_finite
    if args.regularity and not square:
        raise NotSquare(f"regularity needs a square matrix, got {matrix.rows}x{matrix.cols}")
    if args.regularity and not finite:
        raise NonFiniteEntries("regularity needs a finite matrix")
    payload = {
        "rows": matrix.rows,
        "cols": matrix.cols,
        "idempotent": is_idempotent(matrix) if square else None,
        "regular": None,
        "witness": None,
        "ranks": None,
        "factor_rank_bounds": None,
        "row_space": None,
        "column_space": None,
    }
    if square and finite:
        report = regularity_witness(matrix)
        payload["regular"] = report.regular
        payload["witness"] = matrix_to_document(report.witness) if report.witness else None
    if finite:
        ranks = rank_report(matrix, max_tuples=args.max_tuples)
        payload["ranks"] = {
            "row": ranks.row_gen_rank,
            "col": ranks.col_gen_rank,
            "tropical": ranks.tropical_rank,
            "all_equal": ranks.all_equal,
        }
        payload["factor_rank_bounds"] = [
            ranks.tropical_rank,
            min(ranks.row_gen_rank, ranks.col_gen_rank),
        ]
        rows = row_space(matrix)
        cols = column_space(matrix)
        payload["row_space"] = {
            "generator_dimension": rows.generator_dimension(),
            "dual_dimension": rows.dual_dimension(),
        }
        payload["column_space"] = {
            "generator_dimension": cols.generator_dimension(),
            "dual_dimension": cols.dual_dimension(),
        }
    _emit(args, payload)
    return EXIT_OK


def _cmd_polytope(args) -> int:
    polytope = polytope_from_document(_load_json(args.input))
    report = is_projective(polytope)
    complex_ = cell_complex(polytope, args.max_tuples)
    payload = {
        "ambient": polytope.ambient,
        "gendim": report.gendim,
        "dualdim": report.dualdim,
        "tropical_dim": complex_.tropical_dim,
        "pure": complex_.pure,
        "min_plus_convex": polytope.is_min_plus_convex(),
        "projective": report.projective,
        "reason": report.reason,
        "idempotent": matrix_to_document(report.idempotent) if report.idempotent else None,
    }
    _emit(args, payload)
    return EXIT_OK


def _cmd_faces(args) -> int:
    polytope = polytope_from_document(_load_json(args.input))
    complex_ = cell_complex(polytope, args.max_tuples)
    payload = [
        {
            "type": [sorted(c) for c in face.covector],
            "witness": [entry_to_json(v) for v in face.witness],
            "dim": face.dim,
            "covering": face.covering,
        }
        for face in complex_.faces
    ]
    _emit(args, payload)
    return EXIT_OK


def _cmd_plot(args) -> int:
    polytope = polytope_from_document(_load_json(args.input))
    svg = render_polytope_svg(polytope, max_tuples=args.max_tuples)
    _write_text(args.output, svg)
    return EXIT_OK


def _cmd_oracle(args) -> int:
    summary = run_suite(args.suite, seed=args.seed, count=args.count, n=args.n, m=args.m)
    _emit(args, summary)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropcheck",
        description="exact max-plus checks: idempotency, regularity, dimensions, projectivity",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def io_flags(p, needs_max_tuples=True):
        p.add_argument("--input", "-i", default="-", help="input JSON document (default stdin)")
        p.add_argument("--output", "-o", default="-", help="output path (default stdout)")
        p.add_argument("--format", choices=("json", "text"), default="text")
        if needs_max_tuples:
            p.add_argument(
                "--max-tuples",
                type=int,
                default=DEFAULT_MAX_TUPLES,
                help="bound on enumerated argmin profiles",
            )

    analyze = sub.add_parser("analyze", help="analyze a matrix document")
    io_flags(analyze)
    analyze.add_argument(
        "--regularity",
        action="store_true",
        help="insist on the regularity check (fails on non-square or non-finite input)",
    )
    analyze.set_defaults(func=_cmd_analyze)

    polytope = sub.add_parser("polytope", help="dimensions, convexity and projectivity of a polytope")
    io_flags(polytope)
    polytope.set_defaults(func=_cmd_polytope)

    faces = sub.add_parser("faces", help="enumerate the covector cells of a polytope")
    io_flags(faces)
    faces.set_defaults(func=_cmd_faces)

    plot = sub.add_parser("plot", help="deterministic SVG plot of a polytope in FT^3")
    io_flags(plot)
    plot.set_defaults(func=_cmd_plot)

    oracle = sub.add_parser("oracle", help="run a named cross-validation suite")
    oracle.add_argument("suite", choices=sorted(SUITES))
    oracle.add_argument("--output", "-o", default="-")
    oracle.add_argument("--format", choices=("json", "text"), default="json")
    oracle.add_argument("--seed", type=int, default=0)
    oracle.add_argument("--count", type=int, default=100)
    oracle.add_argument("--n", type=int, default=4)
    oracle.add_argument("--m", type=int, default=4)
    oracle.set_defaults(func=_cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MalformedDocument as exc:
        print(f"tropcheck: malformed input: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except ScaleLimitExceeded as exc:
        print(f"tropcheck: scale limit exceeded: {exc}", file=sys.stderr)
        return EXIT_SCALE
    except (
        DimensionMismatch,
        EmptyPolytope,
        NonFiniteEntries,
        NotFullRank,
        NotIdempotent,
        NotSquare,
    ) as exc:
        print(f"tropcheck: unsupported for this input shape: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED


if __name__ == "__main__":
    sys.exit(main())
