"""Command-line front end.

Exit codes: 0 success or equal, 1 unequal, 2 usage, parse, type or theory error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .arrows import ArrowTerm, pretty_arrow, theory_violation, typeof
from .decide import equal_in
from .errors import ProofNetError, TheoryError
from .formula import Formula, Theory, print_formula
from .render import occurrence_labels, save_figure, to_dot
from .rewrite import axiom_catalog, factor_stack, theorem_catalog
from .semantics import g_arrow
from .syntax import parse_arrow, parse_file, parse_formula, print_arrow
from .translate import f_arrow, iso_i, iso_i_inv

EXIT_OK, EXIT_UNEQUAL, EXIT_ERROR = 0, 1, 2


class UsageError(ProofNetError):
    pass


def _type_str(f: ArrowTerm) -> str:
    t = typeof(f)
    return f"{print_formula(t.source)} ⊢ {print_formula(t.target)}"


def _type_json(f: ArrowTerm) -> dict:
    t = typeof(f)
    return {"source": print_formula(t.source), "target": print_formula(t.target)}


def _load_defs(paths) -> dict:
    defs: dict = {}
    for path in paths or ():
        _parse_file_at(Path(path), defs)
    return defs


def _parse_file_at(path: Path, defs: dict) -> dict:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return parse_file(text, defs)
    except ProofNetError as exc:
        raise ProofNetError(f"{path}:{exc}") from exc


def _arrow(text: str, defs: dict, theory: Theory) -> ArrowTerm:
    f = parse_arrow(text, defs)
    typeof(f)
    problem = theory_violation(f, theory)
    if problem:
        raise TheoryError(problem)
    return f


def _graph_json(f: ArrowTerm, theory: Theory) -> dict:
    out = _type_json(f)
    out.update(g_arrow(f, theory).to_json())
    return out


def cmd_check(args, defs: dict) -> tuple[int, str]:
    rows = []
    for path in args.files:
        for name, value in _parse_file_at(Path(path), defs).items():
            if isinstance(value, Formula):
                rows.append((name, None, value))
                continue
            try:
                typeof(value)
                problem = theory_violation(value, args.theory)
            except ProofNetError as exc:
                raise ProofNetError(f"{path}: {name}: {exc}") from exc
            if problem:
                raise TheoryError(f"{path}: {name}: {problem}")
            rows.append((name, value, None))
    if args.json:
        data = [{"name": n, "formula": print_formula(a)} if f is None
                else {"name": n, **_type_json(f)} for n, f, a in rows]
        return EXIT_OK, json.dumps(data, ensure_ascii=False, indent=2)
    lines = [f"formula {n} := {print_formula(a)}" if f is None else f"{n} : {_type_str(f)}"
             for n, f, a in rows]
    return EXIT_OK, "\n".join(lines)


def cmd_graph(args, defs: dict) -> tuple[int, str]:
    f = _arrow(args.term, defs, args.theory)
    graph = g_arrow(f, args.theory)
    t = typeof(f)
    if args.figure:
        save_figure(graph, args.figure, occurrence_labels(t.source), occurrence_labels(t.target),
                    title=pretty_arrow(f))
    if args.json:
        return EXIT_OK, json.dumps(_graph_json(f, args.theory), ensure_ascii=False)
    if args.dot:
        return EXIT_OK, to_dot(graph, occurrence_labels(t.source), occurrence_labels(t.target),
                               title=_type_str(f)).rstrip("\n")
    return EXIT_OK, str(graph)


def cmd_eq(args, defs: dict) -> tuple[int, str]:
    f = _arrow(args.left, defs, args.theory)
    g = _arrow(args.right, defs, args.theory)
    verdict = equal_in(f, g, args.theory)
    code = EXIT_OK if verdict.equal else EXIT_UNEQUAL
    if args.json:
        return code, json.dumps(verdict.to_json())
    if verdict.reason == "type-mismatch":
        return code, f"type-mismatch: {_type_str(f)} versus {_type_str(g)}"
    return code, str(verdict)


def cmd_normalize(args, defs: dict) -> tuple[int, str]:
    f = _arrow(args.term, defs, args.theory)
    stack = factor_stack(f, keep_derived=args.keep_derived)
    # first-applied factor on top, as a proof is read downwards
    if args.json:
        return EXIT_OK, json.dumps([print_arrow(x) for x in stack], ensure_ascii=False)
    return EXIT_OK, "\n".join(print_arrow(x) for x in stack)


def cmd_translate(args, defs: dict) -> tuple[int, str]:
    f = _arrow(args.term, defs, args.theory)
    image = f_arrow(f)
    if args.json:
        return EXIT_OK, json.dumps({"term": print_arrow(image), **_type_json(image)},
                                   ensure_ascii=False)
    return EXIT_OK, f"{print_arrow(image)}\n  : {_type_str(image)}"


def cmd_iso(args, defs: dict) -> tuple[int, str]:
    a = parse_formula(args.formula, defs)
    forward, backward = iso_i(a), iso_i_inv(a)
    if args.json:
        return EXIT_OK, json.dumps({
            "forward": {"term": print_arrow(forward), **_type_json(forward)},
            "backward": {"term": print_arrow(backward), **_type_json(backward)},
        }, ensure_ascii=False)
    return EXIT_OK, "\n".join([
        f"{print_arrow(forward)}\n  : {_type_str(forward)}",
        f"{print_arrow(backward)}\n  : {_type_str(backward)}",
    ])


def cmd_axioms(args, defs: dict) -> tuple[int, str]:
    catalog = theorem_catalog(args.theory) if args.theorems else axiom_catalog(args.theory)
    if args.json:
        return EXIT_OK, json.dumps(
            [{"name": e.name, "sides": [print_arrow(s) for s in e.sides]} for e in catalog],
            ensure_ascii=False, indent=2)
    width = max(len(e.name) for e in catalog)
    lines = [f"{e.name:<{width}}  {e}" for e in catalog]
    lines.append(f"# {len(catalog)} schemata in {args.theory.label}")
    return EXIT_OK, "\n".join(lines)


def cmd_report(args, defs: dict) -> tuple[int, str]:
    if not args.out:
        raise UsageError("report needs --out=FILE for the table; figures are written beside it")
    out = Path(args.out)
    figures = out.parent
    figures.mkdir(parents=True, exist_ok=True)
    buffer = io.StringIO()
    writer = csv.writer(buffer, delimiter="\t", lineterminator="\n")
    writer.writerow(["name", "source", "target", "transversals", "cups", "caps", "figure"])
    for path in args.files:
        for name, value in _parse_file_at(Path(path), defs).items():
            if isinstance(value, Formula):
                continue
            f = _arrow(name, defs, args.theory)
            graph = g_arrow(f, args.theory)
            t = typeof(f)
            png = figures / f"{out.stem}-{name}.png"
            save_figure(graph, png, occurrence_labels(t.source), occurrence_labels(t.target),
                        title=f"{name} : {_type_str(f)}")
            writer.writerow([name, print_formula(t.source), print_formula(t.target),
                             len(graph.transversals()), len(graph.cups()), len(graph.caps()),
                             png.name])
    return EXIT_OK, buffer.getvalue().rstrip("\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--theory", type=Theory, default=Theory.PN_NEG,
                        choices=list(Theory), metavar="{" + ",".join(t.value for t in Theory) + "}",
                        help="theory whose terms are accepted (default pn-neg)")
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--out", metavar="FILE", help="write the output to FILE")
    common.add_argument("--defs", metavar="FILE", action="append",
                        help="load definitions from a .pnc file (repeatable)")

    parser = argparse.ArgumentParser(prog="proofnet",
                                     description="Decide equality of proof-net category arrows.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="type-check term files")
    p.add_argument("files", nargs="+")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("graph", parents=[common], help="print the graph of a term")
    p.add_argument("term")
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    p.add_argument("--figure", metavar="PNG", help="also draw the graph to an image file")
    p.set_defaults(run=cmd_graph)

    p = sub.add_parser("eq", parents=[common], help="decide whether two terms are equal")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(run=cmd_eq)

    p = sub.add_parser("normalize", parents=[common], help="print the developed factor stack")
    p.add_argument("term")
    p.add_argument("--keep-derived", action="store_true",
                   help="keep derived generators as heads instead of expanding them")
    p.set_defaults(run=cmd_normalize)

    p = sub.add_parser("translate", parents=[common], help="push negation down to letters")
    p.add_argument("term")
    p.add_argument("--to", choices=["pn"], default="pn")
    p.set_defaults(run=cmd_translate)

    p = sub.add_parser("iso", parents=[common],
                       help="isomorphisms between a formula and its negation normal form")
    p.add_argument("formula")
    p.set_defaults(run=cmd_iso)

    p = sub.add_parser("axioms", parents=[common], help="list the equation schemata of a theory")
    p.add_argument("--theorems", action="store_true", help="list derived equations instead")
    p.set_defaults(run=cmd_axioms)

    p = sub.add_parser("report", parents=[common],
                       help="tabulate the graphs of term files and draw each one")
    p.add_argument("files", nargs="+")
    p.set_defaults(run=cmd_report)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        defs = _load_defs(args.defs)
        code, text = args.run(args, defs)
    except ProofNetError as exc:
        print(f"proofnet: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
