"""Shared fixtures and brute-force oracles.

The oracles here are deliberately naive (itertools over subsets, partitions
and permutations) so they share no code with the library under test.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from pathlib import Path

import networkx as nx
import pytest
from hypothesis import strategies as st

from nearopt import graph as G
from nearopt.graph import Graph
from nearopt.graph6 import decode

DATA = Path(__file__).parent / "data"


def from_nx(h) -> Graph:
    idx = {v: i for i, v in enumerate(h.nodes())}
    return G.build(len(idx), [(idx[a], idx[b]) for a, b in h.edges()])


def to_nx(g: Graph):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@lru_cache(maxsize=None)
def atlas(max_order: int = 7) -> tuple[Graph, ...]:
    """Every graph on 1..max_order (<= 7) vertices up to isomorphism, from networkx's atlas."""
    return tuple(from_nx(h) for h in nx.graph_atlas_g() if 1 <= h.number_of_nodes() <= max_order)


def read_corpus(name: str) -> list[str]:
    return [line.strip() for line in (DATA / name).read_text().splitlines() if line.strip()]


@lru_cache(maxsize=None)
def corpus_graphs(name: str = "graphs_upto8.g6") -> tuple[Graph, ...]:
    return tuple(decode(t) for t in read_corpus(name))


# -- brute-force oracles ------------------------------------------------------


def bf_adjacent(g: Graph, u: int, v: int) -> bool:
    return v in g.neighbours(u)


def bf_clique_number(g: Graph) -> int:
    best = 0
    for k in range(1, g.n + 1):
        if any(all(bf_adjacent(g, a, b) for a, b in itertools.combinations(s, 2))
               for s in itertools.combinations(range(g.n), k)):
            best = k
        else:
            break
    return best


def bf_chromatic_number(g: Graph) -> int:
    """Fewest blocks in a partition of V into independent sets.

    Enumerates every partition whose blocks are stable (the block holding the
    smallest remaining vertex is chosen first), memoised on the remaining set.
    """
    stable = {
        frozenset(s)
        for k in range(1, g.n + 1)
        for s in itertools.combinations(range(g.n), k)
        if not any(bf_adjacent(g, a, b) for a, b in itertools.combinations(s, 2))
    }

    @lru_cache(maxsize=None)
    def best(rest: frozenset) -> int:
        if not rest:
            return 0
        first = min(rest)
        return 1 + min(best(rest - block) for block in stable if first in block and block <= rest)

    return best(frozenset(range(g.n)))


def bf_contains_induced(g: Graph, h: Graph) -> bool:
    hedges = {frozenset(e) for e in h.edges()}
    for sub in itertools.combinations(range(g.n), h.n):
        for perm in itertools.permutations(sub):
            if all(
                bf_adjacent(g, perm[a], perm[b]) == (frozenset((a, b)) in hedges)
                for a, b in itertools.combinations(range(h.n), 2)
            ):
                return True
    return False


def bf_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.num_edges == h.num_edges and bf_contains_induced(g, h)


def bf_is_perfect(g: Graph) -> bool:
    """Definition: every induced subgraph has chi = omega."""
    for k in range(1, g.n + 1):
        for s in itertools.combinations(range(g.n), k):
            h = G.induced(g, s)
            if bf_chromatic_number(h) != bf_clique_number(h):
                return False
    return True


# -- hypothesis strategies ----------------------------------------------------


@st.composite
def graphs(draw, min_order: int = 0, max_order: int = 8) -> Graph:
    n = draw(st.integers(min_order, max_order))
    pairs = list(itertools.combinations(range(n), 2))
    flags = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return G.build(n, [p for p, f in zip(pairs, flags) if f])


@pytest.fixture(scope="session")
def corpus8() -> tuple[Graph, ...]:
    return corpus_graphs("graphs_upto8.g6")


def _partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


@lru_cache(maxsize=None)
def all_forests(max_order: int = 9) -> tuple[Graph, ...]:
    """Every forest on 1..max_order vertices up to isomorphism, assembled from networkx's tree lists."""
    trees = {k: [from_nx(t) for t in nx.nonisomorphic_trees(k)] if k > 1 else [G.complete(1)]
             for k in range(1, max_order + 1)}
    out = []
    for n in range(1, max_order + 1):
        for part in _partitions(n):
            # a multiset of trees per distinct part size
            groups = []
            for k in sorted(set(part)):
                groups.append(list(itertools.combinations_with_replacement(trees[k], part.count(k))))
            for choice in itertools.product(*groups):
                g = G.empty(0)
                for group in choice:
                    for t in group:
                        g = G.disjoint_union(g, t)
                out.append(g)
    return tuple(out)


# -- acceptance summary ---------------------------------------------------------

ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


def record_acceptance(number: int, title: str, ok: bool, detail: str) -> str:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title} -- {detail}"
    ACCEPTANCE[number] = (title, ok, line)
    print(line)
    return line


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[number][2])
