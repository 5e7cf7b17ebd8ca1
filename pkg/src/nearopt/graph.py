"""Immutable simple graphs stored as adjacency-row bitmasks, plus graph operators.

Vertex sets are plain ``int`` bitmasks over ``range(n)``; bit ``v`` set means
vertex ``v`` is a member.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 128


class GraphError(ValueError):
    """Invalid graph construction or operator argument."""


def bits(mask: int) -> Iterator[int]:
    """Yield the members of a vertex bitmask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbourhood of ``v`` as a bitmask.  Instances are
    immutable and hashable; equality is labelled equality, not isomorphism.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_ORDER:
            raise GraphError(f"order {self.n} outside [0, {MAX_ORDER}]")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"neighbour of {v} out of range")
            if row >> v & 1:
                raise GraphError(f"self-loop at {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def neighbours(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def is_clique(self, s: int) -> bool:
        return all((self.adj[v] | (1 << v)) & s == s for v in bits(s))

    def is_stable(self, s: int) -> bool:
        return all(self.adj[v] & s == 0 for v in bits(s))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def build(n: int, edges: Iterable[Sequence[int]] = ()) -> Graph:
    """Build a graph on ``n`` vertices from an edge list; duplicates collapse."""
    if not 0 <= n <= MAX_ORDER:
        raise GraphError(f"order {n} outside [0, {MAX_ORDER}]")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise GraphError(f"self-loop at {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def _check_order(n: int) -> None:
    if n > MAX_ORDER:
        raise GraphError(f"combined order {n} exceeds {MAX_ORDER}")


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """``g + h``: vertices of ``h`` are renumbered to follow those of ``g``."""
    _check_order(g.n + h.n)
    return Graph(g.n + h.n, g.adj + tuple(row << g.n for row in h.adj))


def join(g: Graph, h: Graph) -> Graph:
    """``g v h``: disjoint union plus every edge between the two parts."""
    _check_order(g.n + h.n)
    g_all = g.vertex_mask
    h_all = h.vertex_mask << g.n
    return Graph(
        g.n + h.n,
        tuple(row | h_all for row in g.adj) + tuple((row << g.n) | g_all for row in h.adj),
    )


def induced(g: Graph, s: int | Iterable[int]) -> Graph:
    """Subgraph induced by ``s``, relabelled to ``0..|s|-1`` preserving order."""
    if not isinstance(s, int):
        s = mask_of(s)
    if s & ~g.vertex_mask:
        raise GraphError("vertex set exceeds graph range")
    keep = list(bits(s))
    index = {v: i for i, v in enumerate(keep)}
    return Graph(len(keep), tuple(mask_of(index[u] for u in bits(g.adj[v] & s)) for v in keep))


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced(g, g.vertex_mask & ~(1 << v))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    adj = [0] * g.n
    for v in range(g.n):
        adj[perm[v]] = mask_of(perm[u] for u in bits(g.adj[v]))
    return Graph(g.n, tuple(adj))


def blow_up(g: Graph, v: int, h: Graph) -> Graph:
    """Replace ``v`` by a copy of ``h`` complete to ``N(v)`` and anticomplete elsewhere.

    The remaining vertices of ``g`` keep their relative order and come first;
    the copy of ``h`` is appended at the end.
    """
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    _check_order(g.n - 1 + h.n)
    rest = induced(g, g.vertex_mask & ~(1 << v))
    nbrs = [u - (u > v) for u in bits(g.adj[v])]
    edges = rest.edges()
    edges += [(rest.n + a, rest.n + b) for a, b in h.edges()]
    edges += [(u, rest.n + x) for u in nbrs for x in range(h.n)]
    return build(rest.n + h.n, edges)


# -- named graphs -------------------------------------------------------------


def empty(n: int) -> Graph:
    return build(n)


def complete(n: int) -> Graph:
    return build(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path(n: int) -> Graph:
    return build(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def complete_minus_edge(n: int) -> Graph:
    if n < 2:
        raise GraphError("K_n - e needs n >= 2")
    return build(n, [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) != (0, 1)])


def copies(r: int, g: Graph) -> Graph:
    """``rG``: disjoint union of ``r`` copies of ``g``."""
    out = empty(0)
    for _ in range(r):
        out = disjoint_union(out, g)
    return out


def claw() -> Graph:
    return join(empty(1), empty(3))


def paw() -> Graph:
    return k2k1_join_kn(1)


def diamond() -> Graph:
    return complete_minus_edge(4)


def gem() -> Graph:
    return p4_join_kn(1)


def hvn() -> Graph:
    return k2k1_join_kn(2)


def p4_join_kn(n: int) -> Graph:
    if n < 0:
        raise GraphError("join size must be non-negative")
    return join(path(4), complete(n))


def k2k1_join_kn(n: int) -> Graph:
    if n < 0:
        raise GraphError("join size must be non-negative")
    return join(disjoint_union(complete(2), complete(1)), complete(n))


def x_family(n: int) -> Graph:
    """C5 joined with K_n."""
    if n < 1:
        raise GraphError("X-family index must be >= 1")
    return join(cycle(5), complete(n))


def y_family(n: int) -> Graph:
    """C5 with two nonadjacent vertices each blown up to K_n.

    Starting from the cycle 0-1-2-3-4, vertices 4 and 1 are blown up.  The
    result lists the three untouched cycle vertices first (old 0, 2, 3; the
    first is adjacent to both cliques), then the copy of 4, then the copy of 1.
    """
    if n < 1:
        raise GraphError("Y-family index must be >= 1")
    g = blow_up(cycle(5), 4, complete(n))  # cycle vertices 0..3 keep labels
    return blow_up(g, 1, complete(n))


def odd_antihole(m: int) -> Graph:
    if m < 5 or m % 2 == 0:
        raise GraphError(f"odd antihole order must be odd and >= 5, got {m}")
    return complement(cycle(m))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build(10, outer + spokes + inner)
