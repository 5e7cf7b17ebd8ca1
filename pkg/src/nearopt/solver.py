"""Exact clique number, chromatic number and small-scale perfectness.

Every routine here is exact: greedy colourings and clique bounds only prune.
Search budgets are explicit; exceeding one raises instead of guessing.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .graph import Graph, bits, complement, delete_vertex, popcount
from .recognize import induced_cycles

CHI_CAP = 40
HOLE_CAP = 20


class SolverCapError(RuntimeError):
    """The instance exceeds a configured order cap or time budget."""


@dataclass
class Deadline:
    """Wall-clock budget shared by one solve; ``None`` seconds means unlimited."""

    seconds: float | None = None

    def __post_init__(self) -> None:
        self._end = None if self.seconds is None else time.monotonic() + self.seconds
        self._ticks = 0

    def check(self) -> None:
        if self._end is None:
            return
        self._ticks += 1
        if self._ticks & 255 == 0 and time.monotonic() > self._end:
            raise SolverCapError(f"time budget of {self.seconds}s exceeded")


# -- clique number ------------------------------------------------------------


def _colour_bound(g: Graph, cand: int) -> list[tuple[int, int]]:
    """Greedy sequential colouring of ``cand``; returns ``(vertex, colour)`` in non-decreasing colour order."""
    out = []
    colour = 0
    rest = cand
    while rest:
        colour += 1
        avail = rest
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= ~g.adj[v] & ~(1 << v)
            rest &= ~(1 << v)
            out.append((v, colour))
    return out


def clique_number(g: Graph, deadline: Deadline | None = None) -> tuple[int, int]:
    """Return ``(omega, clique bitmask)`` by branch and bound with colouring bounds."""
    if g.n == 0:
        return 0, 0
    deadline = deadline or Deadline()
    best = [0, 0]

    def expand(clique: int, size: int, cand: int) -> None:
        deadline.check()
        order = _colour_bound(g, cand)
        for v, colour in reversed(order):
            if size + colour <= best[0]:
                return
            new_clique = clique | 1 << v
            new_cand = cand & g.adj[v]
            if new_cand:
                expand(new_clique, size + 1, new_cand)
            elif size + 1 > best[0]:
                best[0], best[1] = size + 1, new_clique
            cand &= ~(1 << v)

    expand(0, 0, g.vertex_mask)
    return best[0], best[1]


def independence_number(g: Graph) -> int:
    return clique_number(complement(g))[0]


# -- colouring ----------------------------------------------------------------


def greedy_colouring(g: Graph) -> list[int]:
    """DSATUR greedy colouring, colours ``1..q``."""
    colour = [0] * g.n
    nbr_colours = [0] * g.n  # bitmask of colours seen among coloured neighbours
    uncoloured = g.vertex_mask
    while uncoloured:
        v = max(bits(uncoloured), key=lambda u: (popcount(nbr_colours[u]), g.degree(u), -u))
        c = 1
        while nbr_colours[v] >> c & 1:
            c += 1
        colour[v] = c
        uncoloured &= ~(1 << v)
        for u in bits(g.adj[v]):
            nbr_colours[u] |= 1 << c
    return colour


def is_proper(g: Graph, colouring: list[int]) -> bool:
    return all(colouring[u] != colouring[v] for u, v in g.edges()) and all(c >= 1 for c in colouring)


def is_k_colourable(g: Graph, k: int, deadline: Deadline | None = None) -> list[int] | None:
    """A proper colouring with colours ``1..k``, or ``None`` when none exists.

    Exact DSATUR backtracking; a new colour is only ever the next unused
    index, which removes colour-permutation symmetry.
    """
    if g.n == 0:
        return []
    if k <= 0:
        return None
    deadline = deadline or Deadline()
    colour = [0] * g.n
    # vertices of a maximum clique get colours 1..|K| up front
    _, clique = clique_number(g, deadline)
    if popcount(clique) > k:
        return None
    nbr_colours = [0] * g.n
    uncoloured = g.vertex_mask
    for c, v in enumerate(bits(clique), 1):
        colour[v] = c
        uncoloured &= ~(1 << v)
        for u in bits(g.adj[v]):
            nbr_colours[u] |= 1 << c
    full = ((1 << (k + 1)) - 1) & ~1

    def solve(uncoloured: int, used: int) -> bool:
        if not uncoloured:
            return True
        deadline.check()
        best_v, best_key = -1, None
        for u in bits(uncoloured):
            sat = popcount(nbr_colours[u])
            if sat == k:
                return False
            key = (sat, popcount(g.adj[u] & uncoloured))
            if best_key is None or key > best_key:
                best_v, best_key = u, key
        v = best_v
        allowed = full & ~nbr_colours[v]
        limit = min(k, used + 1)
        for c in range(1, limit + 1):
            if not allowed >> c & 1:
                continue
            colour[v] = c
            touched = []
            for u in bits(g.adj[v] & uncoloured):
                if not nbr_colours[u] >> c & 1:
                    nbr_colours[u] |= 1 << c
                    touched.append(u)
            if solve(uncoloured & ~(1 << v), max(used, c)):
                return True
            for u in touched:
                nbr_colours[u] &= ~(1 << c)
        colour[v] = 0
        return False

    if solve(uncoloured, popcount(clique)):
        return colour
    return None


def chromatic_number(
    g: Graph, cap: int = CHI_CAP, deadline: Deadline | None = None
) -> tuple[int, list[int]]:
    """Return ``(chi, colouring)``; searches upward from the clique bound."""
    if g.n > cap:
        raise SolverCapError(f"order {g.n} exceeds chromatic solver cap {cap}")
    if g.n == 0:
        return 0, []
    deadline = deadline or Deadline()
    upper = greedy_colouring(g)
    q_upper = max(upper)
    omega, _ = clique_number(g, deadline)
    for q in range(omega, q_upper):
        colouring = is_k_colourable(g, q, deadline)
        if colouring is not None:
            return q, colouring
    return q_upper, upper


# -- perfectness --------------------------------------------------------------


def _hole_cap(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise SolverCapError(f"order {g.n} exceeds hole-enumeration cap {cap}")


def find_odd_hole(g: Graph, cap: int = HOLE_CAP) -> list[int] | None:
    _hole_cap(g, cap)
    return next((cyc for _, cyc in induced_cycles(g, min_len=5, parity=1)), None)


def has_odd_hole(g: Graph, cap: int = HOLE_CAP) -> bool:
    return find_odd_hole(g, cap) is not None


def has_odd_antihole(g: Graph, cap: int = HOLE_CAP) -> bool:
    return has_odd_hole(complement(g), cap)


def is_perfect_small(g: Graph, cap: int = HOLE_CAP) -> bool:
    """Perfectness via absence of odd holes and odd antiholes."""
    return not has_odd_hole(g, cap) and not has_odd_antihole(g, cap)


def near_optimal_check(g: Graph, c: int, cap: int = CHI_CAP) -> bool:
    """``chi(g) <= max(c, omega(g))``."""
    chi, _ = chromatic_number(g, cap)
    return chi <= max(c, clique_number(g)[0])


def find_comparable_pair(g: Graph) -> tuple[int, int] | None:
    """Smallest ``(u1, u2)`` with ``u1 != u2`` and ``N(u1)`` a subset of ``N(u2)``."""
    for u1 in range(g.n):
        row = g.adj[u1]
        for u2 in range(g.n):
            if u2 != u1 and row & ~g.adj[u2] == 0:
                return u1, u2
    return None


def reduce_comparable(g: Graph) -> Graph:
    """Delete dominated vertices until no comparable pair is left (chi and omega unchanged)."""
    while True:
        pair = find_comparable_pair(g)
        if pair is None:
            return g
        g = delete_vertex(g, pair[0])
