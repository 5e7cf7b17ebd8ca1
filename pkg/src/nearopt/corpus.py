"""Isomorph-free enumeration of small graphs, optionally inside a hereditary class.

This is a desk-scale stand-in for nauty's ``geng``: graphs of order ``k`` are
grown from representatives of order ``k - 1`` by adding a vertex with every
possible neighbourhood, then deduplicated with an invariant hash plus an
exact isomorphism test.  Restricting to ``patterns``-free graphs is sound
because the class is closed under vertex deletion.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .graph import Graph, bits, popcount
from .iso import is_free, is_isomorphic


def _invariant(g: Graph) -> tuple:
    deg = [popcount(r) for r in g.adj]
    per_vertex = []
    for v in range(g.n):
        row = g.adj[v]
        tri = sum(popcount(g.adj[u] & row) for u in bits(row)) // 2
        per_vertex.append((deg[v], tri, tuple(sorted(deg[u] for u in bits(row)))))
    return (g.n, sum(deg) // 2, tuple(sorted(per_vertex)))


def _extensions(g: Graph) -> Iterator[Graph]:
    n = g.n
    for nbrs in range(1 << n):
        adj = list(g.adj)
        for u in bits(nbrs):
            adj[u] |= 1 << n
        adj.append(nbrs)
        yield Graph(n + 1, tuple(adj))


def generate(max_order: int, patterns: Sequence[Graph] = (), min_order: int = 1) -> Iterator[Graph]:
    """Yield one representative per isomorphism class of ``patterns``-free graphs.

    Orders run from ``min_order`` to ``max_order`` ascending; within an order
    the sequence is deterministic.
    """
    level = [Graph(0, ())]
    if min_order <= 0:
        yield level[0]
    for order in range(1, max_order + 1):
        buckets: dict[tuple, list[Graph]] = {}
        nxt: list[Graph] = []
        for parent in level:
            for cand in _extensions(parent):
                if patterns and not is_free(cand, patterns):
                    continue
                bucket = buckets.setdefault(_invariant(cand), [])
                if any(is_isomorphic(cand, other) for other in bucket):
                    continue
                bucket.append(cand)
                nxt.append(cand)
        level = nxt
        if order >= min_order:
            yield from level
