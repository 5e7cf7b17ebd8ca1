"""Neighbourhood partitions around an induced C5 or a long antihole, with checkers.

Positions on the five-cycle are stored 0-based (``q[0]..q[4]``) but all
public labels and certificates use 1-based indices ``1..5``; :func:`pos`
is the single conversion point.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, bits, complement, induced, mask_of
from .graph6 import encode_str
from .iso import is_free
from .recognize import induced_cycles
from .solver import clique_number
from . import graph as G


def pos(i: int) -> int:
    """0-based storage slot of 1-based cycle label ``i`` (any integer, taken mod 5)."""
    return (i - 1) % 5


class DecompositionError(ValueError):
    pass


def _omega_of(g: Graph, s: int) -> tuple[int, int]:
    """``(omega, clique)`` of ``g[s]`` with the clique expressed in ``g``'s labels."""
    if not s:
        return 0, 0
    size, local = clique_number(induced(g, s))
    members = list(bits(s))
    return size, mask_of(members[i] for i in bits(local))


@dataclass
class C5Partition:
    """Trace partition of ``V \\ Q`` for an ordered induced C5 ``Q = (v1..v5)``.

    ``A[i]``, ``B[i]``, ``D[i]`` are indexed by storage slot ``pos(i)``.
    """

    q: tuple[int, ...]
    A: list[int]
    B: list[int]
    D: list[int]
    F: int
    Z: int
    unclassified: int = 0

    def v(self, i: int) -> int:
        return self.q[pos(i)]

    def a(self, i: int) -> int:
        return self.A[pos(i)]

    def b(self, i: int) -> int:
        return self.B[pos(i)]

    def d(self, i: int) -> int:
        return self.D[pos(i)]

    def s(self, i: int) -> int:
        """``S_i = A_i + {v_i}``."""
        return self.a(i) | 1 << self.v(i)

    @property
    def q_mask(self) -> int:
        return mask_of(self.q)

    def cells(self) -> dict[str, int]:
        out = {}
        for i in range(1, 6):
            out[f"A{i}"] = self.a(i)
            out[f"B{i}"] = self.b(i)
            out[f"D{i}"] = self.d(i)
        out["F"] = self.F
        out["Z"] = self.Z
        return out


def _expected_traces(q: tuple[int, ...]) -> dict[int, tuple[str, int]]:
    """Map trace bitmask on ``Q`` to its cell ``(name, 1-based index)``."""
    v = lambda i: 1 << q[pos(i)]  # noqa: E731
    table: dict[int, tuple[str, int]] = {}
    for i in range(1, 6):
        table[v(i - 1) | v(i + 1)] = ("A", i)
        table[v(i) | v(i - 2) | v(i + 2)] = ("B", i)
        table[mask_of(q) & ~v(i)] = ("D", i)
    table[mask_of(q)] = ("F", 0)
    table[0] = ("Z", 0)
    return table


def check_c5_order(g: Graph, q) -> tuple[int, ...]:
    q = tuple(q)
    if len(q) != 5 or len(set(q)) != 5 or any(not 0 <= x < g.n for x in q):
        raise DecompositionError("Q must be five distinct vertices of the graph")
    for i in range(5):
        for j in range(i + 1, 5):
            consecutive = (j - i) % 5 in (1, 4)
            if g.has_edge(q[i], q[j]) != consecutive:
                raise DecompositionError(f"{q} does not induce a C5 in the given cyclic order")
    return q


def decompose_c5(g: Graph, q) -> C5Partition:
    q = check_c5_order(g, q)
    qm = mask_of(q)
    table = _expected_traces(q)
    A, B, D = [0] * 5, [0] * 5, [0] * 5
    F = Z = unclassified = 0
    for u in bits(g.vertex_mask & ~qm):
        cell = table.get(g.adj[u] & qm)
        if cell is None:
            unclassified |= 1 << u
            continue
        name, i = cell
        if name == "A":
            A[pos(i)] |= 1 << u
        elif name == "B":
            B[pos(i)] |= 1 << u
        elif name == "D":
            D[pos(i)] |= 1 << u
        elif name == "F":
            F |= 1 << u
        else:
            Z |= 1 << u
    return C5Partition(q, A, B, D, F, Z, unclassified)


# -- claim checks -------------------------------------------------------------


@dataclass
class ClaimResult:
    id: str
    holds: bool
    certificate: dict | None = None

    def to_dict(self) -> dict:
        return {"id": self.id, "holds": self.holds, "certificate": self.certificate}


@dataclass
class ClaimReport:
    graph6: str
    q: tuple[int, ...]
    n: int
    hypotheses_met: bool
    claims: list[ClaimResult] = field(default_factory=list)
    hypothesis_violation: str | None = None

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.claims)

    def to_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "q": list(self.q),
            "n": self.n,
            "hypotheses_met": self.hypotheses_met,
            "hypothesis_violation": self.hypothesis_violation,
            "claims": [c.to_dict() for c in self.claims],
        }


def _edge_in(g: Graph, s: int) -> tuple[int, int] | None:
    for u in bits(s):
        row = g.adj[u] & s
        if row:
            return u, next(bits(row))
    return None


def _missing_edge(g: Graph, s: int, t: int) -> tuple[int, int] | None:
    for u in bits(s):
        miss = t & ~g.adj[u] & ~(1 << u)
        if miss:
            return u, next(bits(miss))
    return None


def _hypotheses(g: Graph, n: int) -> str | None:
    if not is_free(g, [G.copies(2, G.complete(2))]):
        return "graph contains 2K2"
    if not is_free(g, [G.p4_join_kn(n)]):
        return f"graph contains P4 v K{n}"
    return None


def check_claims(g: Graph, p: C5Partition, n: int) -> ClaimReport:
    """Evaluate the seven structural statements about ``p`` for parameter ``n >= 1``.

    When ``g`` is not (2K2, P4 v K_n)-free the checks still run and the report
    is flagged ``hypotheses_met = False``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    violation = _hypotheses(g, n)
    rep = ClaimReport(encode_str(g), p.q, n, violation is None, hypothesis_violation=violation)
    add = rep.claims.append

    # coverage: every vertex has one of the listed traces, and the trace matches its cell
    table = _expected_traces(p.q)
    qm = p.q_mask
    cert = None
    if p.unclassified:
        u = next(bits(p.unclassified))
        cert = {"vertex": u, "trace": sorted(bits(g.adj[u] & qm)), "reason": "unclassified trace"}
    else:
        seen = 0
        for name, cell in p.cells().items():
            for u in bits(cell):
                if qm >> u & 1 or seen >> u & 1:
                    cert = {"vertex": u, "cell": name, "reason": "vertex in Q or in two cells"}
                    break
                seen |= 1 << u
                t_name, t_i = table.get(g.adj[u] & qm, ("?", 0))
                label = t_name + (str(t_i) if t_i else "")
                if label != name:
                    cert = {"vertex": u, "cell": name, "trace_cell": label, "reason": "trace disagrees with cell"}
                    break
            if cert:
                break
        if cert is None and seen | qm != g.vertex_mask:
            u = next(bits(g.vertex_mask & ~(seen | qm)))
            cert = {"vertex": u, "reason": "vertex missing from every cell"}
    add(ClaimResult("coverage", cert is None, cert))

    # S_i + Z stable
    cert = None
    for i in range(1, 6):
        e = _edge_in(g, p.s(i) | p.Z)
        if e:
            cert = {"i": i, "edge": list(e)}
            break
    add(ClaimResult("stability", cert is None, cert))

    # omega(D_i + F) <= n - 1
    cert = None
    for i in range(1, 6):
        w, clique = _omega_of(g, p.d(i) | p.F)
        if w > n - 1:
            cert = {"i": i, "clique": sorted(bits(clique))}
            break
    add(ClaimResult("clique-cap", cert is None, cert))

    # B_i complete to B_{i-1} + B_{i+1} + A_i
    cert = None
    for i in range(1, 6):
        miss = _missing_edge(g, p.b(i), p.b(i - 1) | p.b(i + 1) | p.a(i))
        if miss:
            cert = {"i": i, "nonedge": list(miss)}
            break
    add(ClaimResult("completeness", cert is None, cert))

    # non-neighbours in B_i of the listed vertices are stable
    cert = None
    d_all = p.D[0] | p.D[1] | p.D[2] | p.D[3] | p.D[4]
    for i in range(1, 6):
        sources = p.a(i + 2) | p.a(i - 2) | p.b(i + 2) | p.b(i - 2) | d_all | p.F
        for u in bits(sources):
            e = _edge_in(g, p.b(i) & ~g.adj[u])
            if e:
                cert = {"i": i, "u": u, "edge": list(e)}
                break
        if cert:
            break
    add(ClaimResult("nonneighbour-stability", cert is None, cert))

    # omega(B_i) >= n + 1 forces B_{i+2}, B_{i-2}, D_{i+2}, D_{i-2} empty
    cert = None
    for i in range(1, 6):
        w, clique = _omega_of(g, p.b(i))
        if w >= n + 1:
            rest = p.b(i + 2) | p.b(i - 2) | p.d(i + 2) | p.d(i - 2)
            if rest:
                cert = {"i": i, "clique": sorted(bits(clique)), "vertex": next(bits(rest))}
                break
    add(ClaimResult("emptiness", cert is None, cert))

    # omega(N_{B_i}(u)) <= n - 1 for u in A_{i+1} + A_{i-1}
    cert = None
    for i in range(1, 6):
        for u in bits(p.a(i + 1) | p.a(i - 1)):
            w, clique = _omega_of(g, p.b(i) & g.adj[u])
            if w > n - 1:
                cert = {"i": i, "u": u, "clique": sorted(bits(clique))}
                break
        if cert:
            break
    add(ClaimResult("neighbourhood-clique-cap", cert is None, cert))
    return rep


# -- antihole partition -------------------------------------------------------


@dataclass
class AntiholeCheck:
    name: str
    holds: bool
    certificate: dict | None = None

    def to_dict(self) -> dict:
        return {"id": self.name, "holds": self.holds, "certificate": self.certificate}


@dataclass
class AntiholePartition:
    q: tuple[int, ...]
    cells: dict[int, int]  # trace bitmask on Q -> vertex bitmask N_S
    n: int
    hypotheses_met: bool
    hypothesis_violation: str | None = None
    checks: list[AntiholeCheck] = field(default_factory=list)

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "q": list(self.q),
            "n": self.n,
            "hypotheses_met": self.hypotheses_met,
            "hypothesis_violation": self.hypothesis_violation,
            "cells": {",".join(map(str, bits(s))): sorted(bits(c)) for s, c in sorted(self.cells.items())},
            "checks": [c.to_dict() for c in self.checks],
        }


def check_antihole_order(g: Graph, q) -> tuple[int, ...]:
    q = tuple(q)
    r = len(q)
    if r < 6 or len(set(q)) != r or any(not 0 <= x < g.n for x in q):
        raise DecompositionError("Q must be at least six distinct vertices of the graph")
    for i in range(r):
        for j in range(i + 1, r):
            consecutive = (j - i) % r in (1, r - 1)
            if g.has_edge(q[i], q[j]) == consecutive:
                raise DecompositionError(f"{q} is not an antihole with consecutive vertices nonadjacent")
    return q


def decompose_antihole(g: Graph, q, n: int) -> AntiholePartition:
    """Group ``V \\ Q`` by trace on the antihole ``Q`` and check the clique bounds."""
    if n < 1:
        raise ValueError("n must be >= 1")
    q = check_antihole_order(g, q)
    r = len(q)
    qm = mask_of(q)
    cells: dict[int, int] = {}
    for u in bits(g.vertex_mask & ~qm):
        tr = g.adj[u] & qm
        cells[tr] = cells.get(tr, 0) | 1 << u
    violation = _hypotheses(g, n)
    part = AntiholePartition(q, cells, n, violation is None, violation)

    part.checks.append(AntiholeCheck(
        "length", r <= 2 * n + 4, None if r <= 2 * n + 4 else {"r": r, "bound": 2 * n + 4}
    ))
    cert = None
    for trace, cell in sorted(cells.items()):
        rest = qm & ~trace
        if _edge_in(g, rest):
            e = _edge_in(g, cell)
            if e:
                cert = {"trace": sorted(bits(trace)), "case": "complement has an edge", "edge": list(e)}
                break
        else:
            w, clique = _omega_of(g, cell)
            if w > n - 1:
                cert = {"trace": sorted(bits(trace)), "case": "complement stable", "clique": sorted(bits(clique))}
                break
    part.checks.append(AntiholeCheck("cells", cert is None, cert))
    omega, clique = clique_number(g)
    bound = 2 ** r * n + r // 2
    part.checks.append(AntiholeCheck(
        "omega", omega <= bound, None if omega <= bound else {"omega": omega, "bound": bound}
    ))
    return part


def find_long_antihole(g: Graph, min_len: int = 6) -> list[int] | None:
    """Vertices of an induced antihole on ``>= min_len`` vertices in cyclic order (consecutive nonadjacent)."""
    for _, cyc in induced_cycles(complement(g), min_len=min_len):
        return cyc
    return None


__all__ = [
    "C5Partition", "ClaimReport", "ClaimResult", "AntiholePartition", "AntiholeCheck",
    "decompose_c5", "check_claims", "decompose_antihole", "find_long_antihole",
    "DecompositionError", "pos",
]
