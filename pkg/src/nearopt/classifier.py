"""Decide near-optimal colourability of the (H1, H2)-free graphs.

A family is near-optimal colourable (NOC) when one constant ``c`` gives
``chi(G) <= max(c, omega(G))`` for every member.  :func:`classify` walks the
forest / co-linear-forest case analysis and returns a :class:`Verdict`; the
remaining undecided cases (``H2 = K_n`` or ``K_n - e`` against a forest) are
settled from a small knowledge base when it covers them.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterable

from . import graph as G
from .graph import Graph, complement
from .graph6 import encode_str
from .iso import contains_induced, is_isomorphic
from .names import parse_graph
from .recognize import (
    components,
    is_co_linear_forest,
    is_forest,
    is_linear_forest,
    is_sub_p4,
    longest_induced_cycle,
    match_complete,
    match_complete_minus_edge,
    match_k2k1_join_kn,
    match_p4_join_kn,
)

NOC = "NOC"
NOT_NOC = "NOT_NOC"
OPEN = "OPEN"

ODD_ANTIHOLES = "OddAntiholes"
X_FAMILY = "XFamily"
Y_FAMILY = "YFamily"
ERDOS_HIGH_GIRTH = "ErdosHighGirth"


class NotMaterializable(ValueError):
    """The witness family is only known to exist; no finite construction is available."""


@dataclass(frozen=True)
class WitnessDescriptor:
    """A family ``G_1, G_2, ...`` with ``chi = omega + 1`` and unbounded ``omega``.

    For odd antiholes ``min_index`` is the smallest ``n`` such that the
    complement of ``C_{2n+1}`` avoids both patterns; member ``k`` is the
    antihole on ``2(min_index + k - 1) + 1`` vertices.  ``threshold`` is the
    symbolic lower bound from the near-optimality threshold, which no finite
    computation can pin down.
    """

    family: str
    min_index: int = 1
    longest_cycle: int | None = None
    threshold: str | None = None

    @property
    def materializable(self) -> bool:
        return self.family != ERDOS_HIGH_GIRTH

    def to_dict(self) -> dict:
        d = asdict(self)
        d["materializable"] = self.materializable
        return d


@dataclass(frozen=True)
class KBEntry:
    h1: Graph
    h2: Graph
    constant: int
    citation: str
    h1_text: str = ""
    h2_text: str = ""


@dataclass(frozen=True)
class KnowledgeBase:
    entries: tuple[KBEntry, ...] = ()

    def lookup(self, h1: Graph, h2: Graph) -> KBEntry | None:
        """Entry whose class contains the (h1, h2)-free graphs, smallest constant first."""
        hits = [
            e for e in self.entries
            if (contains_induced(e.h1, h1) and contains_induced(e.h2, h2))
            or (contains_induced(e.h1, h2) and contains_induced(e.h2, h1))
        ]
        return min(hits, key=lambda e: e.constant, default=None)


def _entry(h1: str, h2: str, c: int, cite: str) -> KBEntry:
    return KBEntry(parse_graph(h1), parse_graph(h2), c, cite, h1, h2)


def default_kb() -> KnowledgeBase:
    return KnowledgeBase((
        _entry("P6", "diamond", 6, "GHJM23: (P6, diamond)-free => chi <= max{6, omega}"),
        _entry("2K2", "gem", 3, "BRSV19: (2K2, gem)-free => chi <= max{3, omega}"),
    ))


def load_kb(path: str | Path, include_defaults: bool = False) -> KnowledgeBase:
    """Read ``h1-expr<TAB>h2-expr<TAB>constant<TAB>citation`` lines (``#`` comments allowed)."""
    entries = list(default_kb().entries) if include_defaults else []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) < 3:
            raise ValueError(f"{path}:{lineno}: expected at least 3 tab-separated fields")
        citation = parts[3].strip() if len(parts) > 3 else ""
        try:
            entries.append(_entry(parts[0].strip(), parts[1].strip(), int(parts[2]), citation))
        except ValueError as exc:
            raise ValueError(f"{path}:{lineno}: {exc}") from exc
    return KnowledgeBase(tuple(entries))


# -- the constant for (2K2, P4 v K_n)-free graphs ------------------------------


@dataclass(frozen=True)
class ConstantDerivation:
    """How the constant for (2K2, P4 v K_n)-free graphs is assembled.

    ``thresholds[k-1]`` is the clique size from which antihole-free members
    with parameter ``k`` are perfectly coloured; ``antihole_bound`` caps the
    clique number of members containing a long antihole; the constant is the
    2K2-free binding function ``x(x+1)/2`` at ``max(threshold - 1, antihole_bound)``.
    """

    n: int
    thresholds: tuple[int, ...]
    antihole_bound: int
    constant: int
    derived: bool = True

    @property
    def threshold(self) -> int:
        return self.thresholds[-1]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "thresholds": list(self.thresholds),
            "antihole_bound": self.antihole_bound,
            "constant": self.constant,
            "derived": self.derived,
        }


def threshold(n: int) -> int:
    """Clique size above which antihole-free (2K2, P4 v K_n)-free graphs have chi = omega."""
    if n < 1:
        raise ValueError("n must be >= 1")
    t = 3
    for k in range(2, n + 1):
        t = max(t, 4 * k + 2) + 10 * k
    return t


def antihole_bound(n: int) -> int:
    """Clique-number cap for (2K2, P4 v K_n)-free graphs containing an antihole on >= 6 vertices."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return 2 ** (2 * n + 4) * n + n + 2


def binding_2k2(omega: int) -> int:
    """chi <= omega(omega+1)/2 for 2K2-free graphs."""
    return omega * (omega + 1) // 2


def noc_derivation(n: int) -> ConstantDerivation:
    if n < 1:
        raise ValueError("n must be >= 1")
    ts = tuple(threshold(k) for k in range(1, n + 1))
    b = antihole_bound(n)
    return ConstantDerivation(n, ts, b, binding_2k2(max(ts[-1] - 1, b)))


def noc_constant(n: int) -> int:
    return noc_derivation(n).constant


# -- verdicts -----------------------------------------------------------------


@dataclass
class Verdict:
    kind: str
    rule: str
    constant: int | None = None
    witness: WitnessDescriptor | None = None
    case: str | None = None
    citation: str = ""
    note: str = ""
    forest: Graph | None = None
    other: Graph | None = None
    swapped: bool = False
    derivation: ConstantDerivation | None = None
    steps: list[str] = field(default_factory=list)

    def render(self) -> str:
        if self.kind == NOC:
            text = "NOC" + ("" if self.constant is None else f", c={self.constant}")
        elif self.kind == NOT_NOC:
            text = f"NOT_NOC, witness={self.witness.family if self.witness else '?'}"
        else:
            text = f"OPEN ({self.case})"
        tag = f"{self.rule}: {self.citation}" if self.citation else self.rule
        return f"{text} ({tag})"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "rule": self.rule,
            "constant": self.constant,
            "witness": self.witness.to_dict() if self.witness else None,
            "case": self.case,
            "citation": self.citation,
            "note": self.note,
            "forest": encode_str(self.forest) if self.forest is not None else None,
            "other": encode_str(self.other) if self.other is not None else None,
            "swapped": self.swapped,
            "derivation": self.derivation.to_dict() if self.derivation else None,
            "steps": list(self.steps),
        }


def _two_k2() -> Graph:
    return G.copies(2, G.complete(2))


def path_embedding_length(h: Graph) -> int:
    """A ``t`` with the linear forest ``h`` induced in ``P_t``: paths laid end to end, one gap apart."""
    return h.n + len(components(h)) - 1


def classify(h1: Graph, h2: Graph, kb: KnowledgeBase | None = None) -> Verdict:
    if h1.n == 0 or h2.n == 0:
        raise ValueError("forbidden graphs must be nonempty")
    kb = default_kb() if kb is None else kb

    if is_sub_p4(h1) or is_sub_p4(h2):
        first = is_sub_p4(h1)
        return Verdict(
            NOC, "perfect-subclass", constant=1,
            citation="forbidding an induced subgraph of P4 leaves only perfect graphs",
            forest=h1 if first else h2, other=h2 if first else h1, swapped=not first,
        )
    f1, f2 = is_forest(h1), is_forest(h2)
    if not f1 and not f2:
        return Verdict(
            NOT_NOC, "no-forest", witness=WitnessDescriptor(ERDOS_HIGH_GIRTH),
            citation="Er59: graphs of large girth and large chromatic number exist",
            note="witness is existential; members have high girth so avoid both cyclic patterns",
        )
    c1, c2 = is_co_linear_forest(h1), is_co_linear_forest(h2)
    if not c1 and not c2:
        m = max(longest_induced_cycle(complement(h1)), longest_induced_cycle(complement(h2)))
        # smallest n >= 2 with 2n + 1 > m, so C_{2n+1} has no cycle as short as a pattern's
        min_index = max(2, (m + 1) // 2)
        return Verdict(
            NOT_NOC, "no-co-linear-forest",
            witness=WitnessDescriptor(
                ODD_ANTIHOLES, min_index=min_index, longest_cycle=m,
                threshold="n >= g (the near-optimality threshold, symbolic)",
            ),
            citation="complements of long odd cycles avoid every non-co-linear-forest pattern",
        )

    swapped = not f1
    forest, other = (h2, h1) if swapped else (h1, h2)
    steps: list[str] = []
    base = dict(forest=forest, other=other, swapped=swapped, steps=steps)

    p4k = match_p4_join_kn(other)
    k2k1 = match_k2k1_join_kn(other)
    kn = match_complete(other)
    kne = match_complete_minus_edge(other)
    if p4k is None and k2k1 is None and kn is None and kne is None:
        return Verdict(
            NOT_NOC, "x-family", witness=WitnessDescriptor(X_FAMILY),
            citation="C5 v K_n is (2K2, 3K1, C4)-free with chi = omega + 1", **base,
        )

    if is_isomorphic(other, G.paw()):
        steps.append("paw reduced to K3: paw-free components are K3-free or complete multipartite")
        other = G.complete(3)
        kn, k2k1 = 3, None
        base["other"] = other

    join_size = None
    if p4k is not None and p4k >= 1:
        join_size = p4k
    elif k2k1 is not None and k2k1 >= 2:
        join_size = k2k1
    if join_size is not None:
        if not is_isomorphic(forest, _two_k2()):
            return Verdict(
                NOT_NOC, "y-family", witness=WitnessDescriptor(Y_FAMILY),
                citation="C5 with two nonadjacent vertices blown up to K_n is (gem, HVN, 3K1, C4)-free",
                **base,
            )
        entry = kb.lookup(forest, other)
        if entry is not None:
            return Verdict(NOC, "kb", constant=entry.constant, citation=entry.citation, **base)
        deriv = noc_derivation(join_size)
        return Verdict(
            NOC, "2k2-p4-join", constant=deriv.constant, derivation=deriv,
            citation=f"(2K2, P4 v K{join_size})-free graphs are near-optimal colourable",
            note="constant derived from threshold recursion, antihole bound and the 2K2 binding function; loose by construction",
            **base,
        )

    entry = kb.lookup(forest, other)
    if entry is not None:
        return Verdict(NOC, "kb", constant=entry.constant, citation=entry.citation, **base)
    if kn is not None and is_linear_forest(forest):
        t = path_embedding_length(forest)
        return Verdict(
            NOC, "gyarfas-path", constant=(t - 1) ** (kn - 2),
            citation=f"Gy87: P_t-free => chi <= (t-1)^(omega-1), here t={t}",
            note="loose by construction", **base,
        )
    if kn is not None:
        return Verdict(
            OPEN, "open", case="Gyarfas",
            note="not decided here or by the knowledge base", **base,
        )
    return Verdict(
        OPEN, "open", case="KnMinusE",
        note="not decided here or by the knowledge base", **base,
    )


def materialize_witness(w: WitnessDescriptor, k: int) -> Graph:
    """Member ``k >= 1`` of the witness family."""
    if not w.materializable:
        raise NotMaterializable(f"{w.family} has no explicit construction")
    if k < 1:
        raise ValueError("witness index must be >= 1")
    if w.family == ODD_ANTIHOLES:
        n = w.min_index + k - 1
        return G.odd_antihole(2 * n + 1)
    if w.family == X_FAMILY:
        return G.x_family(k)
    if w.family == Y_FAMILY:
        return G.y_family(k)
    raise ValueError(f"unknown witness family {w.family!r}")


def classify_pairs(pairs: Iterable[tuple[Graph, Graph]], kb: KnowledgeBase | None = None) -> list[Verdict]:
    return [classify(a, b, kb) for a, b in pairs]


__all__ = [
    "NOC", "NOT_NOC", "OPEN", "Verdict", "WitnessDescriptor", "KnowledgeBase", "KBEntry",
    "classify", "noc_constant", "noc_derivation", "threshold", "antihole_bound",
    "materialize_witness", "default_kb", "load_kb", "NotMaterializable",
]
