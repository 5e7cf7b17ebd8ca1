"""Induced subgraph containment by bitmask backtracking."""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Sequence

from .graph import Graph, bits, popcount


def _pattern_order(h: Graph) -> list[int]:
    return sorted(range(h.n), key=lambda v: (-h.degree(v), v))


def _embeddings(g: Graph, h: Graph) -> Iterator[dict[int, int]]:
    if h.n > g.n:
        return
    order = _pattern_order(h)
    g_deg = [g.degree(v) for v in range(g.n)]
    g_codeg = [g.n - 1 - d for d in g_deg]
    # host vertices able to play each pattern vertex (degree and co-degree bounds)
    fit = []
    for a in order:
        da = h.degree(a)
        ca = h.n - 1 - da
        fit.append(sum(1 << x for x in range(g.n) if g_deg[x] >= da and g_codeg[x] >= ca))
    full = g.vertex_mask
    image = [0] * h.n
    k = h.n

    def extend(depth: int, used: int) -> Iterator[dict[int, int]]:
        if depth == k:
            yield {order[i]: image[order[i]] for i in range(k)}
            return
        a = order[depth]
        cand = fit[depth] & ~used
        row = h.adj[a]
        for i in range(depth):
            b = order[i]
            if row >> b & 1:
                cand &= g.adj[image[b]]
            else:
                cand &= full & ~g.adj[image[b]]
            if not cand:
                return
        for x in bits(cand):
            image[a] = x
            yield from extend(depth + 1, used | 1 << x)

    yield from extend(0, 0)


def find_induced(g: Graph, h: Graph) -> dict[int, int] | None:
    """An embedding ``pattern vertex -> host vertex`` of ``h`` as an induced subgraph of ``g``.

    Search order is deterministic: pattern vertices by descending degree, host
    candidates by ascending index.
    """
    return next(_embeddings(g, h), None)


def contains_induced(g: Graph, h: Graph) -> bool:
    return find_induced(g, h) is not None


def is_embedding(g: Graph, h: Graph, emb: dict[int, int]) -> bool:
    if sorted(emb) != list(range(h.n)) or len(set(emb.values())) != h.n:
        return False
    return all(
        h.has_edge(a, b) == g.has_edge(emb[a], emb[b]) for a, b in combinations(range(h.n), 2)
    )


def is_free(g: Graph, patterns: Sequence[Graph]) -> bool:
    """True when ``g`` contains none of ``patterns`` (smallest patterns tried first)."""
    for h in sorted(patterns, key=lambda p: (p.n, p.num_edges)):
        if contains_induced(g, h):
            return False
    return True


def first_contained(g: Graph, patterns: Sequence[Graph]) -> int | None:
    """Index into ``patterns`` of the first (in fail-fast order) pattern ``g`` contains."""
    order = sorted(range(len(patterns)), key=lambda i: (patterns[i].n, patterns[i].num_edges, i))
    for i in order:
        if contains_induced(g, patterns[i]):
            return i
    return None


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    if sorted(g.degree(v) for v in range(g.n)) != sorted(h.degree(v) for v in range(h.n)):
        return False
    return contains_induced(g, h)


def _c5_in_order(g: Graph, s: int) -> list[int] | None:
    """Cyclic order of a 5-set inducing C5: start at the smallest vertex, go to its smaller neighbour."""
    if popcount(s) != 5 or any(popcount(g.adj[v] & s) != 2 for v in bits(s)):
        return None
    start = next(bits(s))
    order = [start]
    prev, cur = -1, start
    nxt = next(bits(g.adj[start] & s))
    while nxt != start:
        order.append(nxt)
        prev, cur = cur, nxt
        nxt = next(bits(g.adj[cur] & s & ~(1 << prev)))
    return order if len(order) == 5 else None


def iter_induced_c5(g: Graph) -> Iterator[list[int]]:
    """Every induced C5 once, as a cyclic vertex order, in lexicographic order of vertex sets."""
    for combo in combinations(range(g.n), 5):
        s = sum(1 << v for v in combo)
        order = _c5_in_order(g, s)
        if order is not None:
            yield order


def find_induced_c5(g: Graph) -> list[int] | None:
    """Vertices ``v1..v5`` of some induced C5 with ``v_i ~ v_{i+1}``, or ``None``."""
    return next(iter_induced_c5(g), None)
