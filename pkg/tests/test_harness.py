from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nearopt import graph as G
from nearopt.graph6 import decode, encode_str
from nearopt.harness import (
    BINDINGS, CLAIM_IDS, StreamStats, default_workers, filter_stream, sweep_claims, verify_family, verify_graph,
)
from nearopt.names import parse_graph_list

from conftest import atlas, bf_contains_induced, graphs, read_corpus

TWO_K2 = G.copies(2, G.complete(2))


def _lines(order):
    return [encode_str(g) for g in atlas(5) if g.n == order]


@pytest.mark.parametrize("order,expected", [(4, 10), (5, 28)])
def test_filter_2k2_small_orders(order, expected):
    lines = _lines(order)
    stats = StreamStats()
    kept = list(filter_stream(lines, [TWO_K2], stats))
    assert len(kept) == expected
    # brute-force oracle on the same stream
    assert kept == [t for t in lines if not bf_contains_induced(decode(t), TWO_K2)]
    assert (stats.scanned, stats.kept, stats.filtered, stats.malformed) == (len(lines), expected, len(lines) - expected, 0)


def test_filter_c5_cases():
    assert list(filter_stream(["Dhc"], [G.cycle(4)])) == ["Dhc"]
    assert list(filter_stream(["Dhc"], [G.cycle(5)])) == []


def test_filter_malformed_lines_continue():
    stats = StreamStats()
    kept = list(filter_stream(["Dhc", "bad!", "A_"], [], stats))
    assert kept == ["Dhc", "A_"]
    assert stats.malformed == 1 and stats.errors[0]["line"] == 2


@given(st.lists(st.one_of(graphs(max_order=7).map(encode_str), st.sampled_from(["", "zz", "D"])), max_size=25))
@settings(max_examples=60, deadline=None)
def test_conservation_and_order(lines):
    stats = StreamStats()
    kept = list(filter_stream(lines, [TWO_K2, G.cycle(4)], stats))
    assert stats.scanned == stats.kept + stats.filtered + stats.malformed
    assert stats.kept == len(kept)
    # output is a subsequence of the input
    it = iter(t.strip() for t in lines)
    assert all(any(k == x for x in it) for k in kept)


def test_verify_graph_record():
    rec = verify_graph(G.cycle(5), 2)
    assert (rec.omega, rec.chi, rec.violation, rec.gap) == (2, 3, True, 1)
    rec = verify_graph(G.cycle(5), 3)
    assert not rec.violation and rec.gap == 0


def test_verify_graph_binding():
    rec = verify_graph(G.cycle(5), 0, binding="2k2")
    assert rec.constant == 3 and not rec.violation
    assert BINDINGS["2k2"](4) == 10


def test_verify_graph_cap_is_skip_not_pass():
    rec = verify_graph(G.cycle(41), 3)
    assert rec.status.startswith("skipped: cap") and rec.chi is None and not rec.violation


def test_verify_c5_negative_control():
    report = verify_family(["Dhc"], [], 2)
    assert report.violations == 1
    assert report.worst.graph6 == "Dhc" and report.worst.chi == 3


def test_verify_skips_are_counted():
    report = verify_family([encode_str(G.cycle(41)), "Dhc"], [], 3)
    assert report.skipped == 1 and report.violations == 0
    assert report.records[0].status.startswith("skipped")


def test_verify_unknown_binding():
    with pytest.raises(ValueError):
        verify_family([], [], 1, binding="nope")


def test_totals_consistent_with_records():
    lines = read_corpus("graphs_upto8.g6")[:400]
    report = verify_family(lines, [TWO_K2], 2)
    d = report.to_dict()
    assert d["totals"]["kept"] == len(d["records"])
    assert d["totals"]["violations"] == sum(r["violation"] for r in d["records"])
    assert d["totals"]["scanned"] == d["totals"]["kept"] + d["totals"]["filtered"] + d["totals"]["malformed"]
    for r in d["records"]:
        assert r["violation"] == (r["chi"] > max(r["constant"], r["omega"]))


def test_report_deterministic_across_workers():
    lines = read_corpus("graphs_upto8.g6")[:1300]
    pats = parse_graph_list("2K2,gem")
    one = verify_family(lines, pats, 3, workers=1).to_json()
    four = verify_family(lines, pats, 3, workers=4).to_json()
    assert one == four
    assert "elapsed" not in one and "wall_time" not in one


def test_report_timing_opt_in():
    doc = json.loads(verify_family(["Dhc"], [], 3).to_json(timing=True))
    assert "wall_time" in doc and "elapsed" in doc["records"][0]


def test_record_order_preserved_with_workers():
    lines = read_corpus("graphs_upto8.g6")[:300]
    report = verify_family(lines, [], 100, workers=3)
    assert [r.graph6 for r in report.records] == lines


def test_workers_env(monkeypatch):
    monkeypatch.setenv("NEAROPT_WORKERS", "3")
    assert default_workers() == 3
    monkeypatch.delenv("NEAROPT_WORKERS")
    assert default_workers() >= 1


# -- claims sweep ------------------------------------------------------------------


def test_sweep_trivial_cases():
    s = sweep_claims(["Dhc"], 1)
    assert s.graphs_processed == 1 and s.c5_checked == 1 and s.total_failures == 0
    assert all(s.passes[c] == 1 for c in CLAIM_IDS)
    s = sweep_claims([encode_str(G.complete(6))], 1)
    assert s.graphs_processed == 0


def test_sweep_json_and_determinism():
    lines = read_corpus("free_2k2_gem_upto9.g6")[:600]
    a = sweep_claims(lines, 1, workers=1).to_json()
    b = sweep_claims(lines, 1, workers=2).to_json()
    assert a == b
    doc = json.loads(a)
    assert doc["failures"] == {c: 0 for c in CLAIM_IDS}


def test_sweep_filters_to_hypotheses():
    # X_1 = C5 v K1 contains a gem, so for n = 1 it is filtered out before checking
    s = sweep_claims([encode_str(G.x_family(1))], 1)
    assert s.stats.filtered == 1 and s.graphs_processed == 0
