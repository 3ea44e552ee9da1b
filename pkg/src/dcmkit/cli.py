"""Command-line surface: compute, certify, verify, reconstruct, recognize,
catalog, and convert.

Exit codes: 0 success or accepted, 1 well-formed negative answer,
2 input error, 3 precondition failure (no acyclic ordering). All outputs
are canonical, so identical invocations produce byte-identical files.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .certificate import (
    CliqueFamily,
    DigraphClass,
    VerificationReport,
    canonical_family,
    family_from_json,
    family_to_json,
    verify_certificate,
)
from .competition import (
    SimpleGraph,
    competition_graph,
    competition_multigraph,
    double_competition_graph,
    double_competition_multigraph,
    simple_graph_from_json,
    simple_graph_to_json,
)
from .graphs import (
    Digraph,
    GraphFormatError,
    Multigraph,
    acyclic_ordering,
    digraph_from_json,
    digraph_to_json,
    multigraph_from_json,
    multigraph_to_json,
)
from .recognition import DEFAULT_BOUND, RecognitionResult, catalog, recognize

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_PRECONDITION = 3

CLASS_NAMES = [c.value for c in DigraphClass]


def _read_text(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _fail(message: str, code: int = EXIT_INPUT) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _stderr_progress(examined: int, total: int | None) -> None:
    if total:
        print(f"examined {examined}/{total} digraphs", file=sys.stderr)
    else:
        print(f"examined {examined} digraphs", file=sys.stderr)


# --- DOT export ----------------------------------------------------------


def digraph_to_dot(d: Digraph) -> str:
    lines = ["digraph D {"]
    lines += [f"  {v};" for v in range(1, d.n + 1)]
    lines += [f"  {u} -> {v};" for u, v in d.sorted_arcs()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def simple_graph_to_dot(g: SimpleGraph) -> str:
    lines = ["graph G {"]
    lines += [f"  {v};" for v in range(1, g.n + 1)]
    lines += [f"  {x} -- {y};" for x, y in g.sorted_edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def multigraph_to_dot(m: Multigraph) -> str:
    # parallel edges render as one edge labeled with the count
    lines = ["graph M {"]
    lines += [f"  {v};" for v in range(1, m.n + 1)]
    for x, y, k in m.edges():
        style = "" if k == 1 else ", style=bold"
        lines.append(f'  {x} -- {y} [label="{k}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# --- subcommands ----------------------------------------------------------


def _cmd_compute(args: argparse.Namespace) -> int:
    d = digraph_from_json(_read_text(args.input))
    if args.variant == "dcm":
        text = multigraph_to_json(double_competition_multigraph(d))
    elif args.variant == "cm":
        text = multigraph_to_json(competition_multigraph(d))
    elif args.variant == "dcg":
        text = simple_graph_to_json(double_competition_graph(d))
    else:
        text = simple_graph_to_json(competition_graph(d))
    _emit(text, args.out)
    return EXIT_OK


def _parse_ordering_flag(spec: str, d: Digraph) -> tuple[int, ...] | None:
    """Resolve --ordering; None signals a failed auto-acyclic request."""
    if spec == "identity":
        return tuple(range(1, d.n + 1))
    if spec == "auto-acyclic":
        return acyclic_ordering(d)
    try:
        ordering = tuple(int(part) for part in spec.split(","))
    except ValueError:
        raise GraphFormatError(
            f"--ordering must be 'identity', 'auto-acyclic', or comma-separated integers, got {spec!r}"
        ) from None
    if sorted(ordering) != list(range(1, d.n + 1)):
        raise GraphFormatError(f"--ordering {spec!r} is not a permutation of 1..{d.n}")
    return ordering


def _cmd_certify(args: argparse.Namespace) -> int:
    d = digraph_from_json(_read_text(args.input))
    ordering = _parse_ordering_flag(args.ordering, d)
    if ordering is None:
        return _fail("no acyclic ordering: the digraph has a directed cycle", EXIT_PRECONDITION)
    family = canonical_family(d, ordering)
    multigraph_out = args.multigraph_out
    if multigraph_out is None:
        out_path = Path(args.out)
        multigraph_out = str(out_path.with_name(out_path.stem + ".dcm.json"))
    _emit(family_to_json(family), args.out)
    _emit(multigraph_to_json(double_competition_multigraph(d)), multigraph_out)
    return EXIT_OK


def _report_text(report: VerificationReport) -> str:
    def verdict(flag: bool | None) -> str:
        if flag is None:
            return "not evaluated"
        return "ok" if flag else "FAIL"

    lines = [
        f"class: {report.digraph_class.value}",
        f"partition: {verdict(report.partition_ok)}",
        f"cliques: {verdict(report.cliques_ok)}",
        f"condition I: {verdict(report.cond_I)}",
        f"condition II: {verdict(report.cond_II)}",
        f"condition III: {verdict(report.cond_III)}",
        f"condition IV: {verdict(report.cond_IV)}",
    ]
    for w in report.witnesses:
        lines.append(f"  {w.describe()}")
    lines.append(f"verdict: {'accepted' if report.accepted else 'rejected'}")
    return "\n".join(lines) + "\n"


def _cmd_verify(args: argparse.Namespace) -> int:
    m = multigraph_from_json(_read_text(args.multigraph))
    family = family_from_json(_read_text(args.certificate))
    report = verify_certificate(m, family, args.digraph_class)
    if args.format == "json":
        text = json.dumps(report.as_dict(), indent=2) + "\n"
    else:
        text = _report_text(report)
    _emit(text, args.out)
    return EXIT_OK if report.accepted else EXIT_NEGATIVE


def _cmd_reconstruct(args: argparse.Namespace) -> int:
    from .certificate import reconstruct_digraph

    family = family_from_json(_read_text(args.input))
    _emit(digraph_to_json(reconstruct_digraph(family)), args.out)
    return EXIT_OK


def _recognition_json(result: RecognitionResult, digraph_class: str) -> str:
    doc = {
        "recognized": result.recognized,
        "class": digraph_class,
        "digraphs_examined": result.digraphs_examined,
        "witness_digraph": None,
        "witness_certificate": None,
    }
    if result.recognized:
        doc["witness_digraph"] = json.loads(digraph_to_json(result.witness_digraph))
        doc["witness_certificate"] = json.loads(family_to_json(result.witness_certificate))
    return json.dumps(doc, indent=2) + "\n"


def _cmd_recognize(args: argparse.Namespace) -> int:
    m = multigraph_from_json(_read_text(args.multigraph))
    progress = _stderr_progress if m.n >= 5 else None
    result = recognize(m, args.digraph_class, bound=args.bound, progress=progress)
    if args.format == "json":
        text = _recognition_json(result, args.digraph_class)
    elif result.recognized:
        text = (
            f"recognized: yes\n"
            f"class: {args.digraph_class}\n"
            f"digraphs examined: {result.digraphs_examined}\n"
            f"witness arcs: {json.dumps(result.witness_digraph.sorted_arcs())}\n"
        )
    else:
        text = (
            f"not a DCM of class {args.digraph_class} at n={m.n}\n"
            f"digraphs examined: {result.digraphs_examined}\n"
        )
    _emit(text, args.out)
    if result.recognized:
        if args.witness_digraph_out:
            _emit(digraph_to_json(result.witness_digraph), args.witness_digraph_out)
        if args.witness_certificate_out:
            _emit(family_to_json(result.witness_certificate), args.witness_certificate_out)
        return EXIT_OK
    return EXIT_NEGATIVE


def _cmd_catalog(args: argparse.Namespace) -> int:
    progress = _stderr_progress if args.n >= 5 else None
    rows = catalog(args.n, args.digraph_class, bound=args.bound, progress=progress)
    total = sum(row.count for row in rows)
    if args.format == "json":
        doc = {
            "n": args.n,
            "class": args.digraph_class,
            "digraphs": total,
            "rows": [
                {"edges": [list(e) for e in row.edges], "count": row.count} for row in rows
            ],
        }
        text = json.dumps(doc, indent=2) + "\n"
    else:
        lines = [
            f"# catalog n={args.n} class={args.digraph_class}",
            f"# digraphs={total} distinct={len(rows)}",
            "edges\tcount",
        ]
        for row in rows:
            key = json.dumps([list(e) for e in row.edges], separators=(",", ":"))
            lines.append(f"{key}\t{row.count}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def _detect_and_load(text: str):
    """Sniff which JSON graph kind a document is and load it."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise GraphFormatError("top-level value must be an object")
    if "cliques" in doc:
        return family_from_json(text)
    if "arcs" in doc:
        return digraph_from_json(text)
    if "edges" in doc:
        entries = doc["edges"] if isinstance(doc["edges"], list) else []
        if any(isinstance(e, list) and len(e) == 2 for e in entries):
            return simple_graph_from_json(text)
        return multigraph_from_json(text)
    raise GraphFormatError("cannot detect input kind: expected arcs, edges, or cliques")


def _cmd_convert(args: argparse.Namespace) -> int:
    target = args.to if args.to is not None else args.format
    obj = _detect_and_load(_read_text(args.input))
    if target == "json" or target == "text":
        writers = {
            Digraph: digraph_to_json,
            Multigraph: multigraph_to_json,
            SimpleGraph: simple_graph_to_json,
            CliqueFamily: family_to_json,
        }
        _emit(writers[type(obj)](obj), args.out)
        return EXIT_OK
    if isinstance(obj, Digraph):
        text = digraph_to_dot(obj)
    elif isinstance(obj, Multigraph):
        text = multigraph_to_dot(obj)
    elif isinstance(obj, SimpleGraph):
        text = simple_graph_to_dot(obj)
    else:
        return _fail("certificates have no DOT rendering; convert a graph file instead")
    _emit(text, args.out)
    return EXIT_OK


# --- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dcmkit",
        description="Double competition multigraphs: operators, certificates, recognition.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("compute", help="apply a competition-style operator to a digraph")
    p.add_argument("input", help="digraph JSON file")
    p.add_argument(
        "--variant",
        required=True,
        choices=["dcm", "cm", "dcg", "cg"],
        help="dcm/cm: (double) competition multigraph; dcg/cg: simple-graph variants",
    )
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("certify", help="extract the canonical certificate of a digraph")
    p.add_argument("input", help="digraph JSON file")
    p.add_argument(
        "--ordering",
        default="identity",
        help="identity, auto-acyclic, or a comma-separated permutation like 2,1,3",
    )
    p.add_argument("--out", required=True, help="certificate output path")
    p.add_argument(
        "--multigraph-out",
        help="where to write the digraph's double competition multigraph "
        "(default: <out>.dcm.json next to --out)",
    )
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("verify", help="verify a certificate against a multigraph")
    p.add_argument("multigraph", help="multigraph JSON file")
    p.add_argument("certificate", help="certificate JSON file")
    p.add_argument("--class", dest="digraph_class", required=True, choices=CLASS_NAMES)
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.add_argument("--out", help="report path (default stdout)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("reconstruct", help="rebuild a digraph from a certificate")
    p.add_argument("input", help="certificate JSON file")
    p.add_argument("--out", help="digraph output path (default stdout)")
    p.set_defaults(func=_cmd_reconstruct)

    p = sub.add_parser("recognize", help="search for a realizing digraph in a class")
    p.add_argument("multigraph", help="multigraph JSON file")
    p.add_argument("--class", dest="digraph_class", required=True, choices=CLASS_NAMES)
    p.add_argument(
        "--bound",
        type=int,
        default=None,
        help=f"vertex bound (default {DEFAULT_BOUND}, max 5)",
    )
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.add_argument("--out", help="result path (default stdout)")
    p.add_argument("--witness-digraph-out", help="also write the witness digraph here")
    p.add_argument("--witness-certificate-out", help="also write the witness certificate here")
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser("catalog", help="tabulate all DCMs realized by a class on [n]")
    p.add_argument("n", type=int, help="vertex count")
    p.add_argument("--class", dest="digraph_class", required=True, choices=CLASS_NAMES)
    p.add_argument(
        "--bound",
        type=int,
        default=None,
        help=f"vertex bound (default {DEFAULT_BOUND}, max 5)",
    )
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.add_argument("--out", help="table path (default stdout)")
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("convert", help="re-serialize a graph file as JSON or DOT")
    p.add_argument("input", help="digraph, multigraph, simple-graph, or certificate JSON")
    p.add_argument("--format", default="json", choices=["json", "dot", "text"])
    p.add_argument("--to", choices=["json", "dot"], help="alias for --format")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=_cmd_convert)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphFormatError as exc:
        return _fail(str(exc))
    except OSError as exc:
        return _fail(str(exc))
    except ValueError as exc:
        return _fail(str(exc))


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
