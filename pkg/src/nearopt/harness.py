"""Streaming verification over graph6 corpora.

Each function consumes an iterable of graph6 lines and keeps the input
order in its output, whatever the worker count.  Reports are plain data
and serialise to JSON deterministically; wall-clock timings are only
included on request because they differ between runs.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from . import graph as G
from .c5 import check_claims, decompose_antihole, decompose_c5, find_long_antihole
from .graph import Graph
from .graph6 import Graph6Error, decode, encode_str, read_lines
from .iso import is_free, iter_induced_c5
from .solver import CHI_CAP, Deadline, SolverCapError, chromatic_number, clique_number

DEFAULT_BUDGET = 10.0
WORKERS_ENV = "NEAROPT_WORKERS"


def default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


@dataclass
class StreamStats:
    scanned: int = 0
    kept: int = 0
    filtered: int = 0
    malformed: int = 0
    errors: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "scanned": self.scanned, "kept": self.kept,
            "filtered": self.filtered, "malformed": self.malformed,
        }


def _free_lines(
    lines: Iterable[bytes | str], patterns: Sequence[Graph], stats: StreamStats
) -> Iterator[tuple[str, Graph]]:
    for lineno, text, item in read_lines(lines):
        stats.scanned += 1
        if isinstance(item, Graph6Error):
            stats.malformed += 1
            stats.errors.append({"line": lineno, "text": text, "error": str(item)})
            continue
        if patterns and not is_free(item, patterns):
            stats.filtered += 1
            continue
        stats.kept += 1
        yield text, item


def filter_stream(
    lines: Iterable[bytes | str], patterns: Sequence[Graph], stats: StreamStats | None = None
) -> Iterator[str]:
    """graph6 lines whose graphs contain none of ``patterns``, in input order.

    Malformed lines are counted and logged in ``stats.errors``; processing continues.
    """
    stats = stats if stats is not None else StreamStats()
    for text, _ in _free_lines(lines, patterns, stats):
        yield text


# -- colouring sweep ----------------------------------------------------------


@dataclass
class VerificationRecord:
    graph6: str
    omega: int | None
    chi: int | None
    constant: int
    violation: bool
    status: str = "ok"
    elapsed: float = 0.0

    @property
    def gap(self) -> int | None:
        if self.chi is None or self.omega is None:
            return None
        return self.chi - max(self.constant, self.omega)

    def to_dict(self, timing: bool = False) -> dict:
        d = {
            "graph6": self.graph6, "omega": self.omega, "chi": self.chi,
            "constant": self.constant, "violation": self.violation, "status": self.status,
        }
        if timing:
            d["elapsed"] = round(self.elapsed, 6)
        return d


BINDINGS: dict[str, Callable[[int], int]] = {
    "none": lambda omega: 0,
    "2k2": lambda omega: omega * (omega + 1) // 2,
}


def verify_graph(
    g: Graph,
    constant: int,
    budget: float | None = DEFAULT_BUDGET,
    cap: int = CHI_CAP,
    binding: str = "none",
) -> VerificationRecord:
    """Solve one graph.  With a ``binding`` other than ``"none"`` the record's
    constant becomes ``max(constant, binding(omega))`` for that graph."""
    start = time.perf_counter()
    text = encode_str(g)
    try:
        deadline = Deadline(budget)
        omega, _ = clique_number(g, deadline)
        chi, _ = chromatic_number(g, cap, deadline)
    except SolverCapError as exc:
        return VerificationRecord(text, None, None, constant, False, f"skipped: cap ({exc})",
                                  time.perf_counter() - start)
    constant = max(constant, BINDINGS[binding](omega))
    return VerificationRecord(text, omega, chi, constant, chi > max(constant, omega), "ok",
                              time.perf_counter() - start)


def _verify_job(args: tuple[str, int, float | None, str]) -> VerificationRecord:
    text, constant, budget, binding = args
    rec = verify_graph(decode(text), constant, budget, binding=binding)
    rec.graph6 = text
    return rec


def _ordered_map(fn: Callable, jobs: Iterable, workers: int) -> Iterator:
    if workers <= 1:
        yield from map(fn, jobs)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(fn, jobs, chunksize=64)


@dataclass
class RunReport:
    input: str
    patterns: list[str]
    constant: int
    stats: StreamStats
    records: list[VerificationRecord]
    binding: str = "none"
    violations: int = 0
    skipped: int = 0
    worst: VerificationRecord | None = None
    wall_time: float = 0.0

    def to_dict(self, records: bool = True, timing: bool = False) -> dict:
        d = {
            "input": self.input,
            "patterns": self.patterns,
            "constant": self.constant,
            "binding": self.binding,
            "totals": {**self.stats.to_dict(), "violations": self.violations, "skipped": self.skipped},
            "errors": self.stats.errors,
            "worst": self.worst.to_dict(timing) if self.worst else None,
        }
        if records:
            d["records"] = [r.to_dict(timing) for r in self.records]
        if timing:
            d["wall_time"] = round(self.wall_time, 6)
        return d

    def to_json(self, records: bool = True, timing: bool = False) -> str:
        return json.dumps(self.to_dict(records, timing), indent=2, sort_keys=True)


def verify_family(
    lines: Iterable[bytes | str],
    patterns: Sequence[Graph],
    constant: int,
    workers: int = 1,
    budget: float | None = DEFAULT_BUDGET,
    input_name: str = "-",
    binding: str = "none",
) -> RunReport:
    """Check ``chi <= max(constant, omega)`` on every pattern-free graph of the stream.

    ``binding`` names a per-graph bound from :data:`BINDINGS` (``"2k2"`` is
    ``omega(omega+1)/2``) that is folded into each record's constant.
    """
    if binding not in BINDINGS:
        raise ValueError(f"unknown binding {binding!r}; choose from {sorted(BINDINGS)}")
    start = time.perf_counter()
    stats = StreamStats()
    jobs = ((text, constant, budget, binding) for text, _ in _free_lines(lines, patterns, stats))
    report = RunReport(input_name, [encode_str(p) for p in patterns], constant, stats, [], binding)
    for rec in _ordered_map(_verify_job, jobs, workers):
        report.records.append(rec)
        if rec.status != "ok":
            report.skipped += 1
            continue
        if rec.violation:
            report.violations += 1
        if report.worst is None or rec.gap > report.worst.gap:
            report.worst = rec
    report.wall_time = time.perf_counter() - start
    return report


# -- structural claim sweep ---------------------------------------------------


CLAIM_IDS = (
    "coverage", "stability", "clique-cap", "completeness",
    "nonneighbour-stability", "emptiness", "neighbourhood-clique-cap",
)


@dataclass
class ClaimSweep:
    n: int
    stats: StreamStats
    graphs_processed: int = 0
    c5_checked: int = 0
    passes: dict[str, int] = field(default_factory=lambda: {c: 0 for c in CLAIM_IDS})
    failures: dict[str, int] = field(default_factory=lambda: {c: 0 for c in CLAIM_IDS})
    counterexamples: list[dict] = field(default_factory=list)
    antihole_graphs: int = 0
    antihole_failures: list[dict] = field(default_factory=list)

    @property
    def total_failures(self) -> int:
        return sum(self.failures.values()) + len(self.antihole_failures)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "totals": self.stats.to_dict(),
            "errors": self.stats.errors,
            "graphs_processed": self.graphs_processed,
            "c5_checked": self.c5_checked,
            "passes": self.passes,
            "failures": self.failures,
            "counterexamples": self.counterexamples,
            "antihole_graphs": self.antihole_graphs,
            "antihole_failures": self.antihole_failures,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def _claims_job(args: tuple[str, int]) -> tuple[int, list[dict], dict | None]:
    """Check every induced C5 of one graph, plus the antihole bounds if it has a long antihole."""
    text, n = args
    g = decode(text)
    reports = []
    count = 0
    for q in iter_induced_c5(g):
        count += 1
        rep = check_claims(g, decompose_c5(g, q), n)
        reports.append({c.id: (c.holds, c.certificate) for c in rep.claims} | {"q": list(q)})
    antihole = None
    q = find_long_antihole(g)
    if q is not None:
        part = decompose_antihole(g, q, n)
        antihole = {"q": list(part.q), "ok": part.all_hold, "checks": [c.to_dict() for c in part.checks]}
    return count, reports, antihole


def sweep_claims(
    lines: Iterable[bytes | str], n: int, workers: int = 1, max_counterexamples: int = 20
) -> ClaimSweep:
    """Run the C5-partition claims on every (2K2, P4 v K_n)-free stream graph with an induced C5."""
    stats = StreamStats()
    patterns = [G.copies(2, G.complete(2)), G.p4_join_kn(n)]
    sweep = ClaimSweep(n, stats)
    texts = [text for text, _ in _free_lines(lines, patterns, stats)]
    for text, (count, reports, antihole) in zip(texts, _ordered_map(_claims_job, ((t, n) for t in texts), workers)):
        if antihole is not None:
            sweep.antihole_graphs += 1
            if not antihole["ok"]:
                sweep.antihole_failures.append({"graph6": text, **antihole})
        if not count:
            continue
        sweep.graphs_processed += 1
        sweep.c5_checked += count
        for rep in reports:
            for cid in CLAIM_IDS:
                holds, cert = rep[cid]
                if holds:
                    sweep.passes[cid] += 1
                else:
                    sweep.failures[cid] += 1
                    if len(sweep.counterexamples) < max_counterexamples:
                        sweep.counterexamples.append({"graph6": text, "q": rep["q"], "claim": cid, "certificate": cert})
    return sweep
