"""Recognizers for the graph shapes the classifier branches on."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits, complement, induced, popcount
from .iso import is_isomorphic
from . import graph as G


def _components(g: Graph) -> list[int]:
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        comps.append(comp)
    return comps


def components(g: Graph) -> list[int]:
    """Connected components as vertex bitmasks, ordered by smallest member."""
    return _components(g)


def is_forest(g: Graph) -> bool:
    return g.num_edges == g.n - len(_components(g))


def is_linear_forest(g: Graph) -> bool:
    """Every component is a path."""
    return is_forest(g) and all(g.degree(v) <= 2 for v in range(g.n))


def is_co_linear_forest(g: Graph) -> bool:
    return is_linear_forest(complement(g))


_SUB_P4 = None


def _sub_p4_list() -> list[Graph]:
    global _SUB_P4
    if _SUB_P4 is None:
        _SUB_P4 = [
            G.empty(0), G.empty(1), G.empty(2), G.complete(2),
            G.disjoint_union(G.complete(2), G.empty(1)), G.path(3), G.path(4),
        ]
    return _SUB_P4


def is_sub_p4(g: Graph) -> bool:
    """True iff ``g`` is an induced subgraph of P4."""
    if g.n > 4:
        return False
    return any(is_isomorphic(g, h) for h in _sub_p4_list())


def universal_vertices(g: Graph) -> int:
    full = g.vertex_mask
    return sum(1 << v for v in range(g.n) if g.adj[v] | (1 << v) == full)


def _match_join_remainder(g: Graph, core: Graph) -> int | None:
    """Size ``n`` with ``g`` isomorphic to ``core v K_n``, where ``core`` has no universal vertex."""
    u = universal_vertices(g)
    if g.n - popcount(u) != core.n:
        return None
    if not is_isomorphic(induced(g, g.vertex_mask & ~u), core):
        return None
    return popcount(u)


def match_p4_join_kn(g: Graph) -> int | None:
    return _match_join_remainder(g, G.path(4))


def match_k2k1_join_kn(g: Graph) -> int | None:
    return _match_join_remainder(g, G.disjoint_union(G.complete(2), G.empty(1)))


def match_complete(g: Graph) -> int | None:
    return g.n if g.num_edges == g.n * (g.n - 1) // 2 else None


def match_complete_minus_edge(g: Graph) -> int | None:
    return g.n if g.n >= 2 and g.num_edges == g.n * (g.n - 1) // 2 - 1 else None


def longest_induced_cycle(g: Graph) -> int:
    """Length of the longest induced cycle (0 for forests); exhaustive chordless-path search."""
    best = 0
    for length, _ in induced_cycles(g, min_len=3):
        best = max(best, length)
    return best


def induced_cycles(g: Graph, min_len: int = 3, parity: int | None = None):
    """Yield ``(length, vertex list)`` for each induced cycle once (rooted at its minimum vertex)."""
    for s in range(g.n):
        higher = g.vertex_mask & ~((1 << (s + 1)) - 1)
        # count each cycle once: its two neighbours of s satisfy a < x
        for a in bits(g.adj[s] & higher):
            stack = [(a, [s, a], (1 << s) | (1 << a))]
            while stack:
                cur, path_, used = stack.pop()
                for x in bits(g.adj[cur] & higher & ~used):
                    # x must not be adjacent to interior path vertices other than cur
                    interior = used & ~(1 << s) & ~(1 << cur)
                    if g.adj[x] & interior:
                        continue
                    if g.adj[x] >> s & 1:
                        length = len(path_) + 1
                        if x > a and length >= min_len and (parity is None or length % 2 == parity):
                            yield length, path_ + [x]
                        continue
                    stack.append((x, path_ + [x], used | (1 << x)))


@dataclass(frozen=True)
class ShapeReport:
    is_forest: bool
    is_linear_forest: bool
    is_co_linear_forest: bool
    is_sub_p4: bool
    p4_join_k: int | None
    k2k1_join_k: int | None
    complete: int | None
    complete_minus_edge: int | None
    is_2k2: bool
    is_paw: bool


def shape_report(g: Graph) -> ShapeReport:
    return ShapeReport(
        is_forest=is_forest(g),
        is_linear_forest=is_linear_forest(g),
        is_co_linear_forest=is_co_linear_forest(g),
        is_sub_p4=is_sub_p4(g),
        p4_join_k=match_p4_join_kn(g),
        k2k1_join_k=match_k2k1_join_kn(g),
        complete=match_complete(g),
        complete_minus_edge=match_complete_minus_edge(g),
        is_2k2=is_isomorphic(g, G.copies(2, G.complete(2))),
        is_paw=is_isomorphic(g, G.paw()),
    )
