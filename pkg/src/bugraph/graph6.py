"""graph6 reader and writer.

Only the dense graph6 format is handled. Encoding always uses the shortest size
field and zero padding; decoding rejects nonzero padding instead of repairing it.
"""

from __future__ import annotations

import re
from typing import IO, Iterator, NamedTuple

from .errors import MalformedGraph6, Unsupported
from .graph import MAX_VERTICES, Graph

HEADER = ">>graph6<<"
GRAPH6_RE = re.compile(r"^[\x3f-\x7e]+$")


def _size_field(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def encode_graph6(g: Graph) -> str:
    if g.n > MAX_VERTICES:
        raise Unsupported(f"graph6 encoding supports at most {MAX_VERTICES} vertices")
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    chars = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        chars.append(chr(value + 63))
    return _size_field(g.n) + "".join(chars)


def _parse_size(text: str) -> tuple[int, int]:
    """Return (n, offset of the first data character)."""
    if text[0] != "~":
        return ord(text[0]) - 63, 1
    if len(text) >= 2 and text[1] == "~":
        if len(text) < 8:
            raise MalformedGraph6("truncated 6-byte size field")
        n = 0
        for c in text[2:8]:
            n = n << 6 | (ord(c) - 63)
        return n, 8
    if len(text) < 4:
        raise MalformedGraph6("truncated 4-byte size field")
    n = 0
    for c in text[1:4]:
        n = n << 6 | (ord(c) - 63)
    return n, 4


def decode_graph6(line: str) -> Graph:
    text = line.strip()
    if text.startswith(HEADER):
        text = text[len(HEADER):]
    if not text:
        raise MalformedGraph6("empty graph6 string")
    if not GRAPH6_RE.match(text):
        bad = next(c for c in text if not 63 <= ord(c) <= 126)
        raise MalformedGraph6(f"character {bad!r} outside the graph6 range 63..126")
    n, offset = _parse_size(text)
    if n > MAX_VERTICES:
        raise Unsupported(f"graph with {n} vertices exceeds the {MAX_VERTICES}-vertex limit")
    if n == 0:
        raise Unsupported("graphs with zero vertices are not represented")
    nbits = n * (n - 1) // 2
    data = text[offset:]
    if len(data) != (nbits + 5) // 6:
        raise MalformedGraph6(f"expected {(nbits + 5) // 6} data characters for n={n}, got {len(data)}")
    value = 0
    for c in data:
        value = value << 6 | (ord(c) - 63)
    pad = len(data) * 6 - nbits
    if value & ((1 << pad) - 1):
        raise MalformedGraph6("nonzero padding bits")
    value >>= pad
    rows = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(rows))


class Graph6Record(NamedTuple):
    line_no: int
    text: str
    graph: Graph


def read_graph6(stream: IO[str]) -> Iterator[Graph6Record]:
    """Decode a graph6 stream line by line; blank lines and the header are skipped."""
    for line_no, raw in enumerate(stream, start=1):
        text = raw.strip()
        if text.startswith(HEADER):
            text = text[len(HEADER):]
        if not text:
            continue
        try:
            g = decode_graph6(text)
        except MalformedGraph6 as exc:
            raise MalformedGraph6(str(exc), line_no) from None
        except Unsupported as exc:
            raise Unsupported(f"line {line_no}: {exc}") from None
        yield Graph6Record(line_no, text, g)
