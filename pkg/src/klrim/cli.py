"""
Command-line surface and the JSON wire formats.

Formats (all coordinates and entries 1-based):
  permutation   [2, 1, 3]                       row-form
  composition   [2, 1]
  diagram       {"nodes": [[r, c], ...]}        row-major sorted
  tableau       {"nodes": [...], "entries": [...]}  parallel arrays
  k-path        {"paths": [[[r, c], ...], ...]}
  rim           {"composition": [...],
                 "rim": [{"row_form": [...], "reduced_word": [...],
                          "diagram": [[r, c], ...], "special": bool}, ...],
                 "cell_size": int}

Exit codes: 0 success, 1 verification mismatch or cross-check diff,
2 malformed input or search bound exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Iterable, Sequence

from .compositions import Composition, check_composition
from .diagrams import Diagram, DTableau, is_admissible, subsequence_type
from .paths import KPath, order_kpath
from .permutations import check_permutation, reduced_word
from .rims import (
    DEFAULT_SEARCH_BOUND,
    RimResult,
    SearchBoundExceeded,
    THEOREMS,
    cell_elements,
    cell_size,
    rim_closed_form,
    rim_search,
    verify_theorem,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

ENV_BOUND = "KLRIM_MAX_N"


def parse_composition(text: str) -> Composition:
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse composition {text!r}; expected e.g. 2,1")
    return check_composition(parts)


# --- JSON codecs -----------------------------------------------------------


def diagram_to_json(diagram: Diagram) -> dict[str, Any]:
    return {"nodes": [[r, c] for r, c in diagram.nodes]}


def diagram_from_json(obj: Any) -> Diagram:
    if not isinstance(obj, dict) or "nodes" not in obj:
        raise ValueError('diagram JSON must be {"nodes": [[r, c], ...]}')
    return Diagram(tuple((int(r), int(c)) for r, c in obj["nodes"]))


def tableau_to_json(tableau: DTableau) -> dict[str, Any]:
    return {
        "nodes": [[r, c] for r, c in tableau.diagram.nodes],
        "entries": list(tableau.entries),
    }


def tableau_from_json(obj: Any) -> DTableau:
    if not isinstance(obj, dict) or "nodes" not in obj or "entries" not in obj:
        raise ValueError('tableau JSON must be {"nodes": [...], "entries": [...]}')
    return DTableau(
        Diagram(tuple((int(r), int(c)) for r, c in obj["nodes"])),
        tuple(int(e) for e in obj["entries"]),
    )


def kpath_to_json(kpath: KPath) -> dict[str, Any]:
    return {"paths": [[[r, c] for r, c in path] for path in kpath.paths]}


def kpath_from_json(obj: Any) -> KPath:
    if not isinstance(obj, dict) or "paths" not in obj:
        raise ValueError('k-path JSON must be {"paths": [[[r, c], ...], ...]}')
    paths = tuple(tuple((int(r), int(c)) for r, c in path) for path in obj["paths"])
    support = {node for path in paths for node in path}
    try:
        host = Diagram(tuple(support))
    except ValueError:
        host = None  # support occupies a partial grid; ordering still works
    return KPath(paths, host=host)


def rim_result_to_json(result: RimResult) -> dict[str, Any]:
    return {
        "composition": list(result.composition),
        "rim": [
            {
                "row_form": list(y),
                "reduced_word": list(reduced_word(y)),
                "diagram": [[r, c] for r, c in d.nodes],
                "special": special,
            }
            for y, d, special in zip(result.rim, result.diagrams, result.special)
        ],
        "cell_size": cell_size(result),
    }


# --- text rendering --------------------------------------------------------


def render_diagram(diagram: Diagram, indent: str = "") -> str:
    lines = []
    for r in range(1, diagram.row_count + 1):
        cells = [
            "×" if (r, c) in diagram else " "
            for c in range(1, diagram.column_count + 1)
        ]
        lines.append((indent + " ".join(cells)).rstrip())
    return "\n".join(lines)


def _render_word(word: Sequence[int]) -> str:
    return " ".join(str(k) for k in word) if word else "(identity)"


def render_rim_text(result: RimResult) -> str:
    lines = [
        "composition: " + ",".join(map(str, result.composition)),
        f"rim size: {result.rim_size}",
        f"cell size: {cell_size(result)}",
    ]
    for y, d, special in zip(result.rim, result.diagrams, result.special):
        lines.append(f"y = {list(y)}")
        lines.append(f"  word: {_render_word(reduced_word(y))}")
        lines.append(f"  special: {'yes' if special else 'no'}")
        lines.append("  diagram:")
        lines.append(render_diagram(d, indent="    "))
    return "\n".join(lines)


# --- subcommands -----------------------------------------------------------


def _resolve_bound(explicit: int | None) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get(ENV_BOUND)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{ENV_BOUND} must be an integer, got {env!r}")
    return DEFAULT_SEARCH_BOUND


def _cmd_rim(args: argparse.Namespace, out) -> int:
    parts = parse_composition(args.composition)
    bound = _resolve_bound(args.max_n)

    searched = closed = None
    if args.method in ("search", "cross-check"):
        searched = rim_search(parts, bound)
    if args.method in ("closed", "cross-check"):
        closed = rim_closed_form(parts)
        if closed is None:
            raise ValueError(
                f"no closed form known for composition {parts}; use --method search"
            )
    if args.method == "cross-check" and (
        searched.rim != closed.rim or searched.diagrams != closed.diagrams
    ):
        print(
            f"cross-check mismatch for {parts}: "
            f"search {list(searched.rim)} vs closed {list(closed.rim)}",
            file=out,
        )
        return EXIT_MISMATCH

    result = searched if searched is not None else closed
    if args.count_only:
        print(result.rim_size, file=out)
    elif args.format == "json":
        print(json.dumps(rim_result_to_json(result)), file=out)
    else:
        print(render_rim_text(result), file=out)
    return EXIT_OK


def _cmd_cell(args: argparse.Namespace, out) -> int:
    parts = parse_composition(args.composition)
    bound = _resolve_bound(args.max_n)
    if args.count_only:
        print(cell_size(rim_search(parts, bound)), file=out)
        return EXIT_OK
    for w, word in cell_elements(parts, bound):
        if args.format == "json":
            print(
                json.dumps({"row_form": list(w), "reduced_word": list(word)}),
                file=out,
            )
        else:
            print(f"{list(w)}  word: {_render_word(word)}", file=out)
    return EXIT_OK


def _cmd_order_path(args: argparse.Namespace, out, stdin) -> int:
    try:
        data = json.load(stdin)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed k-path JSON: {exc}")
    kpath = kpath_from_json(data)
    ordered = order_kpath(kpath, parts=args.parts)
    print(json.dumps(kpath_to_json(ordered)), file=out)
    return EXIT_OK


def _cmd_admissible(args: argparse.Namespace, out, stdin) -> int:
    try:
        data = json.load(stdin)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed diagram JSON: {exc}")
    diagram = diagram_from_json(data)
    admissible = is_admissible(diagram)
    seq_type = subsequence_type(diagram)
    if args.format == "json":
        print(
            json.dumps(
                {"admissible": admissible, "subsequence_type": list(seq_type)}
            ),
            file=out,
        )
    else:
        print(f"admissible: {'yes' if admissible else 'no'}", file=out)
        print("subsequence type: " + ",".join(map(str, seq_type)), file=out)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace, out) -> int:
    bound = _resolve_bound(None)
    theorems = THEOREMS if args.theorem == "all" else (args.theorem,)
    all_ok = True
    for theorem in theorems:
        report = verify_theorem(theorem, args.max_n, bound=max(bound, args.max_n))
        for check in report.checks:
            status = "PASS" if check.ok else f"FAIL ({check.detail})"
            print(
                f"{theorem} "
                + ",".join(map(str, check.composition))
                + f": {status}",
                file=out,
            )
        summary = "PASS" if report.passed else "FAIL"
        print(f"{theorem}: {len(report.checks)} compositions checked: {summary}", file=out)
        all_ok = all_ok and report.passed
    return EXIT_OK if all_ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="klrim",
        description=(
            "Right Kazhdan-Lusztig cells of symmetric groups attached to "
            "compositions: rims, reduced forms, diagrams and ordered k-paths."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, composition=True):
        if composition:
            p.add_argument(
                "--composition", required=True, help="comma-separated parts, e.g. 2,1"
            )
        p.add_argument(
            "--format", choices=("json", "text"), default="text", help="output format"
        )
        p.add_argument(
            "--max-n",
            type=int,
            default=None,
            dest="max_n",
            help=f"search bound override (default {DEFAULT_SEARCH_BOUND}, env {ENV_BOUND})",
        )
        p.add_argument(
            "--count-only", action="store_true", help="print only the element count"
        )

    p_rim = sub.add_parser("rim", help="compute the rim of a cell")
    add_common(p_rim)
    p_rim.add_argument(
        "--method",
        choices=("closed", "search", "cross-check"),
        default="search",
        help="engine: closed form, search, or both with a diff",
    )

    p_cell = sub.add_parser("cell", help="stream all cell elements with reduced words")
    add_common(p_cell)

    p_order = sub.add_parser(
        "order-path", help="read k-path JSON on stdin, write an equivalent ordered one"
    )
    p_order.add_argument(
        "--parts",
        type=int,
        default=None,
        help="force exactly this many constituent paths",
    )

    p_adm = sub.add_parser(
        "admissible", help="read diagram JSON on stdin, report admissibility and type"
    )
    p_adm.add_argument("--format", choices=("json", "text"), default="text")

    p_verify = sub.add_parser(
        "verify", help="diff the closed-form rules against the search engine"
    )
    p_verify.add_argument("theorem", choices=THEOREMS + ("all",))
    p_verify.add_argument("--max-n", type=int, default=6, dest="max_n")

    return parser


def main(argv: Sequence[str] | None = None, stdin=None, stdout=None) -> int:
    out = stdout if stdout is not None else sys.stdout
    source = stdin if stdin is not None else sys.stdin
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "rim":
            return _cmd_rim(args, out)
        if args.command == "cell":
            return _cmd_cell(args, out)
        if args.command == "order-path":
            return _cmd_order_path(args, out, source)
        if args.command == "admissible":
            return _cmd_admissible(args, out, source)
        if args.command == "verify":
            return _cmd_verify(args, out)
        raise AssertionError(f"unhandled command {args.command}")
    except (SearchBoundExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry_point() -> None:
    sys.exit(main())
