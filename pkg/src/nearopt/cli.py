"""Command-line interface: ``nearopt <subcommand> ...``.

Exit codes: 0 success / no violations, 1 violations or counterexamples found,
2 usage or operational error.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager
from typing import Iterator, Sequence, TextIO

from . import graph as G
from .c5 import check_claims, decompose_antihole, decompose_c5, find_long_antihole
from .classifier import classify, default_kb, load_kb, noc_derivation
from .corpus import generate
from .graph6 import Graph6Error, encode_str, read_lines
from .harness import BINDINGS, default_workers, filter_stream, StreamStats, sweep_claims, verify_family
from .iso import find_induced_c5
from .names import ExpressionError, parse_graph, parse_graph_list
from .solver import SolverCapError, chromatic_number, clique_number, is_perfect_small


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with its own code
        raise UsageError(message)


@contextmanager
def _open_input(path: str) -> Iterator[TextIO]:
    if path == "-":
        yield sys.stdin
    else:
        try:
            f = open(path)
        except OSError as exc:
            raise UsageError(f"--input: {exc}") from exc
        with f:
            yield f


def _graph_arg(flag: str, text: str):
    try:
        return parse_graph(text)
    except (ExpressionError, Graph6Error, ValueError) as exc:
        raise UsageError(f"{flag}: {exc}") from exc


def _list_arg(flag: str, text: str):
    try:
        return parse_graph_list(text)
    except (ExpressionError, Graph6Error, ValueError) as exc:
        raise UsageError(f"{flag}: {exc}") from exc


def _positive(flag: str, value: int) -> int:
    if value < 1:
        raise UsageError(f"{flag}: must be >= 1, got {value}")
    return value


def _workers(args) -> int:
    if args.workers is not None:
        return _positive("--workers", args.workers)
    try:
        return default_workers()
    except ValueError as exc:
        raise UsageError(f"NEAROPT_WORKERS: {exc}") from exc


def _emit(out: TextIO, doc) -> None:
    out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")


def cmd_classify(args, out: TextIO) -> int:
    h1 = _graph_arg("--h1", args.h1)
    h2 = _graph_arg("--h2", args.h2)
    if h1.n == 0 or h2.n == 0:
        raise UsageError("--h1/--h2: forbidden graphs must be nonempty")
    try:
        kb = load_kb(args.kb, include_defaults=args.kb_defaults) if args.kb else default_kb()
    except (OSError, ValueError) as exc:
        raise UsageError(f"--kb: {exc}") from exc
    verdict = classify(h1, h2, kb)
    if args.json:
        _emit(out, verdict.to_dict())
    else:
        out.write(verdict.render() + "\n")
        if verdict.witness is not None:
            w = verdict.witness
            out.write(f"  witness: {w.family} (min index {w.min_index}, materializable={w.materializable})\n")
        for step in verdict.steps:
            out.write(f"  step: {step}\n")
        if verdict.note:
            out.write(f"  note: {verdict.note}\n")
    return 0


def cmd_solve(args, out: TextIO) -> int:
    what = [w.strip() for w in args.what.split(",") if w.strip()]
    bad = [w for w in what if w not in ("chi", "omega", "perfect")]
    if bad or not what:
        raise UsageError(f"--what: unknown quantity {bad[0] if bad else '(empty)'!r}")
    graphs = []
    if args.graph:
        graphs.append((args.graph, _graph_arg("--graph", args.graph)))
    else:
        with _open_input(args.input) as f:
            for lineno, text, item in read_lines(f):
                if isinstance(item, Graph6Error):
                    raise UsageError(f"--input line {lineno}: {item}")
                graphs.append((text, item))
    rows = []
    for text, g in graphs:
        row: dict = {"graph6": encode_str(g)}
        try:
            if "omega" in what:
                row["omega"] = clique_number(g)[0]
            if "chi" in what:
                row["chi"] = chromatic_number(g, args.cap)[0]
            if "perfect" in what:
                row["perfect"] = is_perfect_small(g)
        except SolverCapError as exc:
            raise UsageError(f"{text}: {exc}") from exc
        rows.append(row)
    if args.json:
        _emit(out, rows)
    else:
        for row in rows:
            out.write(" ".join([row["graph6"]] + [f"{k}={row[k]}" for k in what]) + "\n")
    return 0


def cmd_gen(args, out: TextIO) -> int:
    fam = args.family
    try:
        if fam == "named":
            if not args.name:
                raise UsageError("--name is required with --family named")
            graphs = [_graph_arg("--name", args.name)]
        elif fam == "corpus":
            patterns = _list_arg("--free", args.free) if args.free else []
            graphs = generate(_positive("--param", args.param), patterns)
        else:
            k = _positive("--param", args.param)
            build = {"x": G.x_family, "y": G.y_family, "antihole": lambda n: G.odd_antihole(2 * n + 1)}
            graphs = [build[fam](k)]
        for g in graphs:
            out.write(encode_str(g) + "\n")
    except G.GraphError as exc:
        raise UsageError(f"--param: {exc}") from exc
    return 0


def cmd_filter(args, out: TextIO) -> int:
    patterns = _list_arg("--free", args.free)
    stats = StreamStats()
    with _open_input(args.input) as f:
        for text in filter_stream(f, patterns, stats):
            out.write(text + "\n")
    for err in stats.errors:
        sys.stderr.write(f"line {err['line']}: {err['error']}\n")
    return 0


def cmd_verify(args, out: TextIO) -> int:
    patterns = _list_arg("--free", args.free)
    with _open_input(args.input) as f:
        report = verify_family(
            f, patterns, args.constant, workers=_workers(args), budget=args.budget,
            input_name=args.input, binding=args.binding,
        )
    doc = report.to_json(records=args.records, timing=args.timing)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(doc + "\n")
    if args.json:
        out.write(doc + "\n")
    else:
        t = report.to_dict(records=False)["totals"]
        out.write(
            f"scanned={t['scanned']} kept={t['kept']} filtered={t['filtered']} malformed={t['malformed']} "
            f"violations={t['violations']} skipped={t['skipped']}\n"
        )
        for rec in report.records:
            if rec.violation:
                out.write(f"VIOLATION {rec.graph6} chi={rec.chi} omega={rec.omega} c={rec.constant}\n")
    return 1 if report.violations else 0


def cmd_decompose(args, out: TextIO) -> int:
    n = _positive("--n", args.n)
    failed = False
    docs = []
    with _open_input(args.input) as f:
        for lineno, text, item in read_lines(f):
            if isinstance(item, Graph6Error):
                raise UsageError(f"--input line {lineno}: {item}")
            doc: dict = {"graph6": text, "c5": None, "antihole": None}
            q = find_induced_c5(item)
            if q is not None:
                part = decompose_c5(item, q)
                rep = check_claims(item, part, n)
                doc["c5"] = {
                    "cells": {k: list(G.bits(v)) for k, v in part.cells().items()},
                    "unclassified": list(G.bits(part.unclassified)),
                    "report": rep.to_dict(),
                }
                failed |= rep.hypotheses_met and not rep.all_hold
            q = find_long_antihole(item)
            if q is not None:
                ah = decompose_antihole(item, q, n)
                doc["antihole"] = ah.to_dict()
                failed |= ah.hypotheses_met and not ah.all_hold
            docs.append(doc)
    _emit(out, docs)
    return 1 if failed else 0


def cmd_claims(args, out: TextIO) -> int:
    n = _positive("--n", args.n)
    with _open_input(args.input) as f:
        sweep = sweep_claims(f, n, workers=_workers(args))
    out.write(sweep.to_json() + "\n")
    return 1 if sweep.total_failures else 0


def cmd_constant(args, out: TextIO) -> int:
    d = noc_derivation(_positive("--n", args.n))
    if args.json:
        _emit(out, d.to_dict())
    else:
        out.write(
            f"n={d.n} thresholds={list(d.thresholds)} antihole_bound={d.antihole_bound} "
            f"constant={d.constant} (derived)\n"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="nearopt", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("classify", help="decide near-optimal colourability of (H1,H2)-free graphs")
    c.add_argument("--h1", required=True, help="graph expression or g6:<graph6>")
    c.add_argument("--h2", required=True)
    c.add_argument("--kb", help="knowledge-base file (tab separated)")
    c.add_argument("--kb-defaults", action="store_true", help="keep the built-in entries when --kb is given")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_classify)

    s = sub.add_parser("solve", help="chromatic number, clique number, perfectness")
    s.add_argument("--what", default="chi,omega")
    s.add_argument("--input", default="-")
    s.add_argument("--graph", help="single graph expression instead of --input")
    s.add_argument("--cap", type=int, default=40)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_solve)

    g = sub.add_parser("gen", help="emit graph6 for witness families, named graphs or a corpus")
    g.add_argument("--family", required=True, choices=["x", "y", "antihole", "named", "corpus"])
    g.add_argument("--param", type=int, default=1)
    g.add_argument("--name", help="graph expression for --family named")
    g.add_argument("--free", help="corpus only: restrict to graphs free of these patterns")
    g.set_defaults(func=cmd_gen)

    f = sub.add_parser("filter", help="keep graph6 lines free of the given patterns")
    f.add_argument("--free", required=True)
    f.add_argument("--input", default="-")
    f.set_defaults(func=cmd_filter)

    v = sub.add_parser("verify", help="falsification sweep of chi <= max(c, omega)")
    v.add_argument("--free", required=True)
    v.add_argument("--constant", type=int, required=True)
    v.add_argument("--binding", choices=sorted(BINDINGS), default="none")
    v.add_argument("--input", default="-")
    v.add_argument("--report", help="write the JSON report to this file")
    v.add_argument("--records", action="store_true", help="include per-graph records in the report")
    v.add_argument("--timing", action="store_true", help="include wall-clock timings (non-deterministic)")
    v.add_argument("--budget", type=float, default=10.0, help="per-graph time budget in seconds")
    v.add_argument("--workers", type=int)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("decompose", help="C5 and antihole neighbourhood partitions per graph")
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--input", default="-")
    d.set_defaults(func=cmd_decompose)

    cl = sub.add_parser("claims", help="sweep the C5-partition claims over a corpus")
    cl.add_argument("--n", type=int, required=True)
    cl.add_argument("--input", default="-")
    cl.add_argument("--workers", type=int)
    cl.set_defaults(func=cmd_claims)

    k = sub.add_parser("constant", help="near-optimality constant for (2K2, P4 v K_n)-free graphs")
    k.add_argument("--n", type=int, required=True)
    k.add_argument("--json", action="store_true")
    k.set_defaults(func=cmd_constant)
    return p


def run(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"nearopt: error: {exc}\n")
        return 2
    except (SolverCapError, OSError) as exc:
        sys.stderr.write(f"nearopt: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
