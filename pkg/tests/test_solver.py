from __future__ import annotations

import random

import pytest
from hypothesis import given, settings

from nearopt import graph as G
from nearopt.iso import is_free, is_isomorphic
from nearopt.names import parse_graph
from nearopt.solver import (
    Deadline, SolverCapError, chromatic_number, clique_number, find_comparable_pair, find_odd_hole,
    greedy_colouring, has_odd_antihole, has_odd_hole, independence_number, is_k_colourable, is_perfect_small,
    is_proper, near_optimal_check, reduce_comparable,
)

from conftest import atlas, bf_chromatic_number, bf_clique_number, bf_is_perfect, corpus_graphs, graphs


def test_clique_examples():
    assert clique_number(G.cycle(5))[0] == 2
    assert clique_number(G.x_family(2))[0] == 4
    assert clique_number(G.odd_antihole(9))[0] == 4


def test_clique_witness_is_clique():
    for g in (G.petersen(), G.x_family(3), G.odd_antihole(11)):
        omega, mask = clique_number(g)
        assert G.popcount(mask) == omega and g.is_clique(mask)


def test_k_colourable_examples():
    assert is_k_colourable(G.cycle(5), 2) is None
    col = is_k_colourable(G.cycle(5), 3)
    assert col is not None and is_proper(G.cycle(5), col) and max(col) <= 3
    assert is_k_colourable(G.y_family(2), 3) is None


def test_chromatic_examples():
    assert chromatic_number(G.x_family(3))[0] == 6
    assert chromatic_number(G.odd_antihole(7))[0] == 4
    assert chromatic_number(G.petersen())[0] == 3
    assert bf_chromatic_number(G.petersen()) == 3


def test_chromatic_edge_cases():
    assert chromatic_number(G.empty(0)) == (0, [])
    assert chromatic_number(G.empty(4))[0] == 1
    assert chromatic_number(G.complete(9))[0] == 9


def test_solver_caps_are_explicit():
    with pytest.raises(SolverCapError):
        chromatic_number(G.cycle(41))
    assert chromatic_number(G.cycle(41), cap=50)[0] == 3
    with pytest.raises(SolverCapError):
        has_odd_hole(G.cycle(21))


def test_deadline_raises():
    rng = random.Random(7)
    edges = [(u, v) for u in range(40) for v in range(u + 1, 40) if rng.random() < 0.5]
    with pytest.raises(SolverCapError):
        chromatic_number(G.build(40, edges), deadline=Deadline(0.0))


def test_oracle_equivalence_atlas():
    for g in atlas(7):
        chi, col = chromatic_number(g)
        assert is_proper(g, col) and max(col, default=0) == chi
        assert chi == bf_chromatic_number(g), g
        assert clique_number(g)[0] == bf_clique_number(g), g


@given(graphs(max_order=9))
@settings(max_examples=80, deadline=None)
def test_chi_at_least_omega(g):
    chi, col = chromatic_number(g)
    omega, _ = clique_number(g)
    assert chi >= omega
    assert chi <= max(greedy_colouring(g), default=0)
    assert is_proper(g, col)


@given(graphs(max_order=9))
@settings(max_examples=60, deadline=None)
def test_independence_is_clique_of_complement(g):
    assert independence_number(g) == clique_number(G.complement(g))[0]


def test_hole_examples():
    assert has_odd_hole(G.cycle(5))
    assert not has_odd_hole(G.path(6))
    assert has_odd_antihole(G.odd_antihole(7))
    assert find_odd_hole(G.cycle(7)) is not None
    assert not has_odd_hole(G.cycle(6))


def test_perfect_examples():
    assert is_perfect_small(G.path(4))
    assert not is_perfect_small(G.cycle(5))
    assert is_perfect_small(G.diamond())
    assert not is_perfect_small(G.petersen())


def test_perfectness_agrees_with_definition():
    for g in atlas(7):
        assert is_perfect_small(g) == bf_is_perfect(g), g


@given(graphs(min_order=8, max_order=8))
@settings(max_examples=25, deadline=None)
def test_perfectness_agrees_with_definition_order8(g):
    assert is_perfect_small(g) == bf_is_perfect(g)


def test_near_optimal_examples():
    assert near_optimal_check(G.cycle(5), 3)
    assert not near_optimal_check(G.cycle(5), 2)


def test_reduce_comparable_examples():
    assert reduce_comparable(parse_graph("K1+K2")) == G.complete(2)
    assert reduce_comparable(G.cycle(5)) == G.cycle(5)
    assert find_comparable_pair(G.cycle(5)) is None
    assert is_isomorphic(reduce_comparable(G.claw()), G.complete(2))


def test_reduce_comparable_preserves_chi_and_omega(corpus8):
    for g in corpus8:
        r = reduce_comparable(g)
        assert find_comparable_pair(r) is None
        assert chromatic_number(r)[0] == chromatic_number(g)[0]
        assert clique_number(r)[0] == clique_number(g)[0]


def test_two_k2_free_binding_order8(corpus8):
    two_k2 = G.copies(2, G.complete(2))
    for g in corpus8:
        if is_free(g, [two_k2]):
            omega = clique_number(g)[0]
            assert chromatic_number(g)[0] <= omega * (omega + 1) // 2


def test_corpus_fixture_sane():
    assert len(corpus_graphs()) == 13598
