"""Command-line interface: ``chromstab compute | check | generate | filter``.

Graphs are read as graph6 lines from a file or stdin; results go to stdout
as JSON lines (or graph6 lines for ``generate``/``filter``); diagnostics go to
stderr, one JSON object per event.

Exit codes: 0 clean, 1 crosscheck disagreement (or any match under
``filter --expect-none``), 2 usage error or a line that could not be processed.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from contextlib import nullcontext
from functools import partial
from typing import Any, Callable, ContextManager, Iterable, Iterator, TextIO

from .families import FAMILIES, build_family
from .graph import GraphError
from .graph6 import Graph6Error, parse_graph6, read_graph6_lines, write_graph6
from .predicate import PredicateError, parse_predicate
from .records import DEFAULT_MAX_EXACT_N, INVARIANTS, ExactLimitError, GraphStreamRecord
from .theorems import G12_LABELS, THEOREMS, run_check

EXIT_OK, EXIT_FOUND, EXIT_USAGE = 0, 1, 2

# worker result: (stdout lines, diagnostic events, flags)
Result = tuple[list[str], list[dict], dict[str, Any]]


def _dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _failure(lineno: int, text: str, exc: Exception) -> dict:
    event = {"event": type(exc).__name__, "line": lineno, "graph6": text, "message": str(exc)}
    if isinstance(exc, Graph6Error) and exc.offset is not None:
        event["offset"] = exc.offset
    return event


def _compute_one(item: tuple[int, str], names: list[str], witnesses: bool, max_exact_n: int) -> Result:
    lineno, text = item
    try:
        rec = GraphStreamRecord(lineno, text, max_exact_n)
        return [_dumps(rec.as_dict(names, witnesses))], [], {}
    except (Graph6Error, ExactLimitError) as exc:
        return [], [_failure(lineno, text, exc)], {"failed": True}


def _filter_one(item: tuple[int, str], expr: str, max_exact_n: int) -> Result:
    lineno, text = item
    try:
        rec = GraphStreamRecord(lineno, text, max_exact_n)
        keep = parse_predicate(expr).evaluate(rec)
        return ([text] if keep else []), [], {"matched": keep}
    except (Graph6Error, ExactLimitError) as exc:
        return [], [_failure(lineno, text, exc)], {"failed": True}


def _check_one(item: tuple[int, str], theorem: str, options: dict, max_exact_n: int) -> Result:
    lineno, text = item
    try:
        g = parse_graph6(text)
        if g.n > max_exact_n:
            raise ExactLimitError(f"order {g.n} exceeds --max-exact-n {max_exact_n}")
        report = run_check(theorem, g, **options)
    except (Graph6Error, ExactLimitError, GraphError) as exc:
        return [], [_failure(lineno, text, exc)], {"failed": True}
    flags = {"status": report.status}
    if not report.applicable:
        return [], [], flags
    return [_dumps({"line": lineno, "graph6": text, **report.as_dict()})], [], flags


def _run(items: Iterable[tuple[int, str]], work: Callable[[tuple[int, str]], Result], jobs: int) -> Iterator[Result]:
    if jobs <= 1:
        yield from map(work, items)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map() returns results in submission order whatever the completion order
        yield from pool.map(work, items, chunksize=16)


def _emit(results: Iterator[Result], out: TextIO, err: TextIO) -> list[dict]:
    flags = []
    for lines, diags, flag in results:
        for line in lines:
            out.write(line + "\n")
        for event in diags:
            err.write(_dumps(event) + "\n")
        flags.append(flag)
    out.flush()
    return flags


def _open_input(path: str | None) -> ContextManager[TextIO]:
    if path in (None, "-"):
        return nullcontext(sys.stdin)
    return open(path, encoding="ascii", errors="replace")


def cmd_compute(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    names = [s.strip() for s in args.invariants.split(",") if s.strip()]
    unknown = [s for s in names if s not in INVARIANTS]
    if unknown:
        err.write(_dumps({"event": "usage", "message": f"unknown invariants {unknown}"}) + "\n")
        return EXIT_USAGE
    with _open_input(args.input) as fh:
        work = partial(_compute_one, names=names, witnesses=args.witnesses, max_exact_n=args.max_exact_n)
        flags = _emit(_run(read_graph6_lines(fh), work, args.jobs), out, err)
    return EXIT_USAGE if any(f.get("failed") for f in flags) else EXIT_OK


def cmd_filter(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    try:
        parse_predicate(args.expr)
    except PredicateError as exc:
        err.write(_dumps({"event": "PredicateError", "message": str(exc), "offset": exc.pos}) + "\n")
        return EXIT_USAGE
    with _open_input(args.input) as fh:
        work = partial(_filter_one, expr=args.expr, max_exact_n=args.max_exact_n)
        flags = _emit(_run(read_graph6_lines(fh), work, args.jobs), out, err)
    if any(f.get("failed") for f in flags):
        return EXIT_USAGE
    if args.expect_none and any(f.get("matched") for f in flags):
        return EXIT_FOUND
    return EXIT_OK


def cmd_check(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    options: dict[str, Any] = {}
    if args.theorem == "ng3":
        options["clause_iv"] = args.clause_iv
    if args.theorem == "g14":
        labels = [s.strip() for s in args.labels.split(",")]
        if sorted(labels) != sorted(G12_LABELS):
            err.write(_dumps({"event": "usage", "message": f"--labels must be a permutation of {','.join(G12_LABELS)}"}) + "\n")
            return EXIT_USAGE
        options["labeling"] = {name: i for i, name in enumerate(labels)}
        options["exact"] = args.exact

    if args.theorem == "prop1":
        report = run_check("prop1", None)
        out.write(_dumps(report.as_dict()) + "\n")
        flags = [{"status": report.status}]
    else:
        with _open_input(args.input) as fh:
            work = partial(_check_one, theorem=args.theorem, options=options, max_exact_n=args.max_exact_n)
            flags = _emit(_run(read_graph6_lines(fh), work, args.jobs), out, err)

    summary = {
        "pass": sum(f.get("status") == "pass" for f in flags),
        "fail": sum(f.get("status") == "fail" for f in flags),
        "not_applicable": sum(f.get("status") == "not-applicable" for f in flags),
        "errors": sum(bool(f.get("failed")) for f in flags),
    }
    out.write(_dumps({"summary": {"theorem": args.theorem, **summary}}) + "\n")
    if summary["errors"]:
        return EXIT_USAGE
    return EXIT_FOUND if summary["fail"] else EXIT_OK


def cmd_generate(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    try:
        g = build_family(args.family, *args.params)
    except GraphError as exc:
        err.write(_dumps({"event": "GraphError", "message": str(exc)}) + "\n")
        return EXIT_USAGE
    out.write(write_graph6(g) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chromstab", description="Exact chromatic-stability toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", nargs="?", default="-", help="graph6 file (default: stdin)")
        p.add_argument("--jobs", type=int, default=1, help="worker processes (output order is unaffected)")
        p.add_argument(
            "--max-exact-n",
            type=int,
            default=DEFAULT_MAX_EXACT_N,
            help="refuse exponential invariants above this order (default %(default)s)",
        )

    p = sub.add_parser("compute", help="compute invariants as JSON lines")
    common(p)
    p.add_argument("--invariants", default="n,m,chi,es", help=f"comma list from {','.join(INVARIANTS)}")
    p.add_argument("--witnesses", action="store_true", help="include colourings and deleted edge sets")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("check", help="run a theorem checker on every input graph")
    common(p)
    p.add_argument("--theorem", required=True, choices=THEOREMS)
    p.add_argument("--clause-iv", choices=("forall", "exists"), default="forall", help="ng3 clause (iv) reading")
    p.add_argument("--labels", default=",".join(G12_LABELS), help="g14: label of each G12 vertex, in vertex order")
    p.add_argument("--exact", action="store_true", help="g14: also compute es of G14 exactly")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("generate", help="print a named graph as graph6")
    p.add_argument("family", help=", ".join(FAMILIES))
    p.add_argument("params", nargs="*")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("filter", help="keep graph6 lines satisfying an invariant predicate")
    common(p)
    p.add_argument("--expr", required=True, help='e.g. "regular=6 and chi=4 and es!=1"')
    p.add_argument("--expect-none", action="store_true", help="exit 1 if any line matches")
    p.set_defaults(func=cmd_filter)
    return parser


def main(argv: list[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    return args.func(args, out, err)


if __name__ == "__main__":
    sys.exit(main())
