"""Named graphs and a small expression language for writing graphs by name.

Grammar (``v`` binds tighter than ``+``; ``~`` is complement)::

    expr   := term ("+" term)*
    term   := factor (("v" | "V" | "∨") factor)*
    factor := "~" factor | [COUNT] "(" expr ")" | [COUNT] NAME

Names: ``Pk Ck Kk Kk-e Xk Yk claw paw diamond gem hvn petersen``, e.g.
``2K2``, ``P4+K3``, ``(K2+K1)vK2``, ``~C7``.  A leading ``g6:`` switches to
raw graph6 instead of the grammar.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import graph as G
from .graph import Graph, GraphError
from .graph6 import decode

KINDS = (
    "P", "C", "K", "KMinusE", "Claw", "Paw", "Diamond", "Gem", "HVN", "2K2", "3K1",
    "P4JoinKn", "K2K1JoinKn", "XFamily", "YFamily", "OddAntihole", "Petersen",
)


@dataclass(frozen=True)
class NamedGraph:
    kind: str
    param: int | None = None


def make_named(spec: NamedGraph) -> Graph:
    kind, k = spec.kind, spec.param
    fixed = {
        "Claw": G.claw, "Paw": G.paw, "Diamond": G.diamond, "Gem": G.gem, "HVN": G.hvn,
        "2K2": lambda: G.copies(2, G.complete(2)), "3K1": lambda: G.empty(3),
        "Petersen": G.petersen,
    }
    if kind in fixed:
        return fixed[kind]()
    param_builders = {
        "P": G.path, "C": G.cycle, "K": G.complete, "KMinusE": G.complete_minus_edge,
        "P4JoinKn": G.p4_join_kn, "K2K1JoinKn": G.k2k1_join_kn,
        "XFamily": G.x_family, "YFamily": G.y_family, "OddAntihole": G.odd_antihole,
    }
    if kind not in param_builders:
        raise GraphError(f"unknown named graph {kind!r}")
    if k is None:
        raise GraphError(f"{kind} needs an integer parameter")
    if kind in ("P", "K") and k < 1:
        raise GraphError(f"{kind}{k}: parameter must be >= 1")
    return param_builders[kind](k)


_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<word>(?i:claw|paw|diamond|gem|hvn|petersen))"
    r"|(?P<name>[PCKXYpckxy])(?P<size>\d+)(?P<minus>-e)?"
    r"|(?P<count>\d+)"
    r"|(?P<op>[+()~∨vV])"
    r")"
)

_WORDS = {
    "claw": "Claw", "paw": "Paw", "diamond": "Diamond", "gem": "Gem",
    "hvn": "HVN", "petersen": "Petersen",
}
_LETTERS = {"P": "P", "C": "C", "K": "K", "X": "XFamily", "Y": "YFamily"}


class ExpressionError(ValueError):
    pass


def _tokenize(text: str) -> list[tuple[str, object]]:
    out: list[tuple[str, object]] = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ExpressionError(f"unexpected input at offset {pos}: {text[pos:]!r}")
        pos = m.end()
        if m["word"]:
            out.append(("atom", NamedGraph(_WORDS[m["word"].lower()])))
        elif m["name"]:
            letter, size = m["name"].upper(), int(m["size"])
            if m["minus"]:
                if letter != "K":
                    raise ExpressionError(f"'-e' only applies to K, got {m.group(0).strip()!r}")
                out.append(("atom", NamedGraph("KMinusE", size)))
            else:
                out.append(("atom", NamedGraph(_LETTERS[letter], size)))
        elif m["count"]:
            out.append(("count", int(m["count"])))
        else:
            op = m["op"]
            out.append(("op", "v" if op in "vV∨" else op))
    return out


class _Parser:
    def __init__(self, tokens: list[tuple[str, object]]):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> tuple[str, object] | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self) -> tuple[str, object]:
        tok = self.peek()
        if tok is None:
            raise ExpressionError("unexpected end of expression")
        self.i += 1
        return tok

    def expr(self) -> Graph:
        g = self.term()
        while self.peek() == ("op", "+"):
            self.take()
            g = G.disjoint_union(g, self.term())
        return g

    def term(self) -> Graph:
        g = self.factor()
        while self.peek() == ("op", "v"):
            self.take()
            g = G.join(g, self.factor())
        return g

    def factor(self) -> Graph:
        kind, value = self.take()
        if (kind, value) == ("op", "~"):
            return G.complement(self.factor())
        count = 1
        if kind == "count":
            count = value  # type: ignore[assignment]
            kind, value = self.take()
        if (kind, value) == ("op", "("):
            inner = self.expr()
            if self.take() != ("op", ")"):
                raise ExpressionError("missing ')'")
            return G.copies(count, inner)
        if kind == "atom":
            return G.copies(count, make_named(value))  # type: ignore[arg-type]
        raise ExpressionError(f"unexpected token {value!r}")


def parse_graph(text: str) -> Graph:
    """Parse a graph expression, or raw graph6 when prefixed with ``g6:``."""
    text = text.strip()
    if text.startswith("g6:"):
        return decode(text[3:])
    parser = _Parser(_tokenize(text))
    if not parser.tokens:
        raise ExpressionError("empty expression")
    try:
        g = parser.expr()
    except GraphError as exc:
        raise ExpressionError(str(exc)) from exc
    if parser.peek() is not None:
        raise ExpressionError(f"trailing input in {text!r}")
    return g


def parse_graph_list(text: str) -> list[Graph]:
    """Comma-separated list of graph expressions (empty string -> [])."""
    return [parse_graph(part) for part in text.split(",") if part.strip()]
