"""graph6 codec, short form only (orders 0..62)."""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import Graph

HEADER = ">>graph6<<"
MAX_ORDER = 62


class Graph6Error(ValueError):
    """Malformed graph6 record. ``offset`` is the 0-based byte position at fault."""

    def __init__(self, message: str, offset: int | None = None) -> None:
        self.offset = offset
        super().__init__(message if offset is None else f"byte {offset}: {message}")


def _body_length(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def parse_graph6(line: str) -> Graph:
    text = line.strip()
    base = 0
    if text.startswith(HEADER):
        text = text[len(HEADER):]
        base = len(HEADER)
    if not text:
        raise Graph6Error("empty record", base)
    data = text.encode("ascii", errors="replace")
    for i, ch in enumerate(data):
        if not 63 <= ch <= 126:
            raise Graph6Error(f"character {chr(ch)!r} outside the graph6 range 63..126", base + i)
    n = data[0] - 63
    if n > MAX_ORDER:
        raise Graph6Error(f"orders above {MAX_ORDER} are not supported", base)
    expected = 1 + _body_length(n)
    if len(data) != expected:
        raise Graph6Error(f"record length {len(data)} but order {n} needs {expected}", base + min(len(data), expected))

    rows = [0] * n
    pairs = n * (n - 1) // 2
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[1 + k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if pairs % 6:
        last = data[-1] - 63
        if last & ((1 << (6 - pairs % 6)) - 1):
            raise Graph6Error("nonzero padding bits", base + len(data) - 1)
    return Graph(n, tuple(rows))


def write_graph6(g: Graph) -> str:
    if g.n > MAX_ORDER:
        raise Graph6Error(f"order {g.n} exceeds the short-form limit {MAX_ORDER}")
    out = [chr(63 + g.n)]
    acc = 0
    k = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = acc << 1 | (g.adj[i] >> j & 1)
            k += 1
            if k % 6 == 0:
                out.append(chr(63 + acc))
                acc = 0
    if k % 6:
        out.append(chr(63 + (acc << (6 - k % 6))))
    return "".join(out)


def read_graph6_lines(stream: TextIO | Iterable[str]) -> Iterator[tuple[int, str]]:
    """Yield ``(line_number, record)`` for non-blank lines, dropping a leading header."""
    for lineno, raw in enumerate(stream, start=1):
        text = raw.strip()
        if lineno == 1 and text.startswith(HEADER):
            text = text[len(HEADER):]
        if text:
            yield lineno, text
