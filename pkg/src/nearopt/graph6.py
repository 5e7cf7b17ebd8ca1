"""graph6 encoding and decoding (the nauty/geng interchange format)."""

from __future__ import annotations

from typing import Iterable, Iterator

from .graph import MAX_ORDER, Graph

HEADER = b">>graph6<<"


class Graph6Error(ValueError):
    pass


def _size_field(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    raise Graph6Error(f"order {n} too large for graph6")


def encode(g: Graph) -> bytes:
    """Encode ``g``; upper triangle in column order ``(0,1),(0,2),(1,2),(0,3),...``."""
    out = bytearray(_size_field(g.n))
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def encode_str(g: Graph) -> str:
    return encode(g).decode("ascii")


def decode(text: bytes | str) -> Graph:
    if isinstance(text, str):
        text = text.encode("ascii")
    data = text.strip()
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    if not data:
        raise Graph6Error("empty graph6 string")
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte!r} at offset {pos} outside [63, 126]")
    if data[0] < 126:
        n = data[0] - 63
        body = data[1:]
    else:
        if len(data) < 4 or data[1] == 126:
            raise Graph6Error("unsupported or truncated size field")
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        body = data[4:]
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds {MAX_ORDER}")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        kind = "truncated" if len(body) < need else "overlong"
        raise Graph6Error(f"{kind} payload: expected {need} bytes, got {len(body)}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def read_lines(lines: Iterable[bytes | str]) -> Iterator[tuple[int, str, Graph | Graph6Error]]:
    """Yield ``(line_number, text, graph_or_error)`` for each non-blank line.

    Malformed lines yield the :class:`Graph6Error` instead of raising so that
    stream consumers can record it and carry on.
    """
    for lineno, raw in enumerate(lines, 1):
        text = raw.decode("ascii", "replace") if isinstance(raw, bytes) else raw
        text = text.strip()
        if not text:
            continue
        try:
            yield lineno, text, decode(text)
        except (Graph6Error, UnicodeEncodeError) as exc:
            yield lineno, text, exc if isinstance(exc, Graph6Error) else Graph6Error(str(exc))
