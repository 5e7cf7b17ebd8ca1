from __future__ import annotations

import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from nearopt import graph as G
from nearopt.iso import (
    contains_induced, find_induced, find_induced_c5, first_contained, is_embedding, is_free,
    is_isomorphic, iter_induced_c5,
)
from nearopt.names import parse_graph

from conftest import bf_contains_induced, graphs


def test_contains_examples():
    assert contains_induced(G.cycle(5), G.path(4))
    assert not contains_induced(G.x_family(1), parse_graph("2K2"))
    assert contains_induced(G.path(5), G.empty(3))
    assert contains_induced(G.odd_antihole(7), G.gem())


def test_find_examples():
    emb = find_induced(G.path(4), G.path(4))
    assert emb is not None and is_embedding(G.path(4), G.path(4), emb)
    assert find_induced(G.complete(3), G.empty(2)) is None
    assert find_induced(G.y_family(2), G.hvn()) is None


def test_is_free_examples():
    assert is_free(G.x_family(3), [parse_graph("2K2"), G.empty(3), G.cycle(4)])
    assert not is_free(G.cycle(5), [G.cycle(5)])
    assert not is_free(G.odd_antihole(9), [G.cycle(4)])
    assert is_free(G.cycle(5), [])


def test_c9_antihole_contains_c4_by_subsets():
    # independent check over every 4-subset
    g = G.odd_antihole(9)
    found = False
    for s in itertools.combinations(range(9), 4):
        h = G.induced(g, s)
        if h.num_edges == 4 and all(h.degree(v) == 2 for v in range(4)):
            found = True
            break
    assert found


def test_first_contained():
    pats = [G.cycle(4), G.path(4), G.complete(3)]
    assert first_contained(G.cycle(5), pats) == 1
    assert first_contained(G.empty(5), pats) is None


def test_find_c5_examples():
    assert find_induced_c5(G.cycle(5)) == [0, 1, 2, 3, 4]
    assert find_induced_c5(G.complete(5)) is None
    x2 = G.x_family(2)
    rim = find_induced_c5(x2)
    assert sorted(rim) == [0, 1, 2, 3, 4]


def test_x2_rim_is_only_c5():
    x2 = G.x_family(2)
    sets = [frozenset(q) for q in iter_induced_c5(x2)]
    assert sets == [frozenset(range(5))]
    # brute force over all 5-subsets agrees
    bf = [s for s in itertools.combinations(range(x2.n), 5) if bf_contains_induced(G.induced(x2, s), G.cycle(5))]
    assert bf == [tuple(range(5))]


@given(graphs(max_order=8))
@settings(max_examples=60, deadline=None)
def test_iter_c5_yields_cycles_in_order(g):
    seen = set()
    for q in iter_induced_c5(g):
        assert frozenset(q) not in seen
        seen.add(frozenset(q))
        for i in range(5):
            assert g.has_edge(q[i], q[(i + 1) % 5])
            assert not g.has_edge(q[i], q[(i + 2) % 5])
    expected = {
        frozenset(s) for s in itertools.combinations(range(g.n), 5)
        if all(G.induced(g, s).degree(v) == 2 for v in range(5)) and G.induced(g, s).num_edges == 5
        and bf_contains_induced(G.induced(g, s), G.cycle(5))
    }
    assert seen == expected


@given(graphs(max_order=8), graphs(min_order=1, max_order=5))
@settings(max_examples=200, deadline=None)
def test_oracle_equivalence(g, h):
    emb = find_induced(g, h)
    assert (emb is not None) == bf_contains_induced(g, h)
    if emb is not None:
        assert is_embedding(g, h, emb)


@given(graphs(max_order=7), graphs(max_order=5), graphs(max_order=4))
@settings(max_examples=100, deadline=None)
def test_monotonicity(g, h, k):
    if contains_induced(g, h) and contains_induced(h, k):
        assert contains_induced(g, k)


@given(st.data(), graphs(max_order=8), graphs(min_order=1, max_order=5))
@settings(max_examples=100, deadline=None)
def test_label_invariance(data, g, h):
    pg = data.draw(st.permutations(range(g.n)))
    ph = data.draw(st.permutations(range(h.n)))
    assert contains_induced(G.relabel(g, pg), G.relabel(h, ph)) == contains_induced(g, h)


@given(st.data(), graphs(max_order=7))
@settings(max_examples=60, deadline=None)
def test_isomorphic_under_relabelling(data, g):
    perm = data.draw(st.permutations(range(g.n)))
    assert is_isomorphic(g, G.relabel(g, perm))


def test_not_isomorphic_same_degree_sequence():
    # C6 and 2K3 are both 2-regular on 6 vertices
    assert not is_isomorphic(G.cycle(6), G.copies(2, G.complete(3)))


def test_search_is_deterministic():
    g = G.petersen()
    assert find_induced(g, G.path(4)) == find_induced(g, G.path(4))
