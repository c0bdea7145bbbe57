"""graph6 and plain edge-list serialization."""

from __future__ import annotations

from typing import Iterator, TextIO

from .errors import EdgeListError, Graph6Error
from .graph import MAX_N, Graph

_HEADER = b">>graph6<<"


def _size_header(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    return bytes([126, 126] + [63 + (n >> s & 63) for s in (30, 24, 18, 12, 6, 0)])


def write_graph6(g: Graph) -> bytes:
    """Encode ``g`` as graph6 (no header line, no trailing newline)."""
    bits = [
        1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)
    ]
    bits += [0] * (-len(bits) % 6)
    body = bytes(
        63 + int("".join(map(str, bits[k : k + 6])), 2) for k in range(0, len(bits), 6)
    )
    return _size_header(g.n) + body


def _read_size(data: bytes) -> tuple[int, int]:
    """Return ``(n, header_length)``."""
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error(Graph6Error.HEADER, "long size field cut short")
        n = 0
        for c in data[2:8]:
            n = n << 6 | (c - 63)
        return n, 8
    if len(data) < 4:
        raise Graph6Error(Graph6Error.HEADER, "size field cut short")
    n = 0
    for c in data[1:4]:
        n = n << 6 | (c - 63)
    return n, 4


def parse_graph6(text: bytes | str) -> Graph:
    """Decode one graph6 record.

    An optional ``>>graph6<<`` prefix and a single trailing newline are
    accepted.  Both long size forms are read.  Any other deviation raises
    :class:`Graph6Error` with a category in ``kind``.
    """
    data = text.encode("utf-8") if isinstance(text, str) else bytes(text)
    if data.endswith(b"\n"):
        data = data[:-1]
        if data.endswith(b"\r"):
            data = data[:-1]
    if data.startswith(_HEADER):
        data = data[len(_HEADER):]
    elif data.startswith(b">>"):
        raise Graph6Error(Graph6Error.HEADER_LINE, "only a >>graph6<< header line is accepted")
    if not data:
        raise Graph6Error(Graph6Error.EMPTY, "no data")
    if data[:1] in (b":", b";", b"&"):
        raise Graph6Error(Graph6Error.FOREIGN, "sparse6/digraph6 records are not graph6")
    for pos, c in enumerate(data):
        if c > 127:
            raise Graph6Error(Graph6Error.NON_ASCII, f"non-ASCII byte at offset {pos}")
        if not 63 <= c <= 126:
            raise Graph6Error(
                Graph6Error.CHARACTER, f"byte {c!r} at offset {pos} outside 63..126"
            )
    n, hlen = _read_size(data)
    if n > MAX_N:
        raise Graph6Error(Graph6Error.TOO_LARGE, f"n={n} exceeds the cap of {MAX_N}")
    nbits = n * (n - 1) // 2
    nchars = -(-nbits // 6)
    body = data[hlen:]
    if len(body) < nchars:
        raise Graph6Error(
            Graph6Error.TRUNCATED, f"expected {nchars} data bytes for n={n}, got {len(body)}"
        )
    if len(body) > nchars:
        raise Graph6Error(
            Graph6Error.TRAILING, f"{len(body) - nchars} unexpected bytes after the bit field"
        )
    value = 0
    for c in body:
        value = value << 6 | (c - 63)
    pad = nchars * 6 - nbits
    if value & ((1 << pad) - 1):
        raise Graph6Error(Graph6Error.PADDING, "non-zero padding bits")
    value >>= pad
    edges = []
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                edges.append((i, j))
            k -= 1
    return Graph.from_edges(n, edges)


def iter_graph6(stream: TextIO) -> Iterator[Graph]:
    """Yield one graph per non-blank line of a graph6 stream."""
    for line in stream:
        line = line.strip()
        if line:
            yield parse_graph6(line)


def read_graph6_file(path) -> list[Graph]:
    with open(path) as fh:
        return list(iter_graph6(fh))


def write_edge_list(g: Graph) -> str:
    """``"n m"`` followed by one ``"u v"`` line per edge."""
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edge_list()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows:
        raise EdgeListError("empty edge list")
    try:
        n, m = (int(x) for x in rows[0])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise EdgeListError(f"malformed edge list: {exc}") from None
    if len(edges) != m:
        raise EdgeListError(f"header announces {m} edges, found {len(edges)}")
    g = Graph.from_edges(n, edges)
    if g.m != m:
        raise EdgeListError("duplicate edges in edge list")
    return g
