"""Text formats: a commented edge list and graph6.

Edge list lines are ``u v`` (one edge), ``v <id>`` (an isolated or extra
vertex) or ``# comment``. graph6 follows the nauty format description:
printable ASCII 63..126, big-endian 6-bit groups, upper triangle in
column-major order.
"""

from __future__ import annotations

from .graph import Graph, GraphError

GRAPH6_HEADER = ">>graph6<<"


class ParseError(GraphError):
    """Input text could not be decoded into a graph."""


def parse_edge_list(text: str) -> Graph:
    vertices: list[int] = []
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) == 2 and parts[0] == "v":
            vertices.append(_nonneg(parts[1], lineno))
            continue
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two vertex labels, got {line!r}")
        u, v = _nonneg(parts[0], lineno), _nonneg(parts[1], lineno)
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"line {lineno}: duplicate edge {key[0]} {key[1]}")
        seen.add(key)
        edges.append((u, v))
    return Graph(vertices, edges)


def _nonneg(token: str, lineno: int) -> int:
    if not token.isdigit():
        raise ParseError(f"line {lineno}: not a nonnegative integer: {token!r}")
    return int(token)


def emit_edge_list(g: Graph) -> str:
    lines = []
    touched = set()
    for u, v in g.edges():
        lines.append(f"{u} {v}")
        touched.update((u, v))
    lines.extend(f"v {v}" for v in g if v not in touched)
    return "\n".join(lines) + ("\n" if lines else "")


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in range(30, -1, -6))
    raise GraphError(f"graph too large for graph6: {n} vertices")


def _decode_size(data: bytes) -> tuple[int, int]:
    """Return ``(n, header_length)``."""
    if not data:
        raise ParseError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        width, start = 6, 2
    else:
        width, start = 3, 1
    chunk = data[start:start + width]
    if len(chunk) < width:
        raise ParseError("truncated graph6 size field")
    n = 0
    for c in chunk:
        n = (n << 6) | (c - 63)
    return n, start + width


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>"):
        if not s.startswith(GRAPH6_HEADER):
            raise ParseError(f"header mismatch: expected {GRAPH6_HEADER!r}")
        s = s[len(GRAPH6_HEADER):]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError:
        raise ParseError("graph6 data must be ASCII") from None
    for i, c in enumerate(data):
        if not 63 <= c <= 126:
            raise ParseError(f"bad graph6 character {chr(c)!r} at offset {i}")
    n, offset = _decode_size(data)
    nbits = n * (n - 1) // 2
    body = data[offset:]
    need = -(-nbits // 6)
    if len(body) < need:
        raise ParseError(f"truncated graph6 bit stream: need {need} bytes, got {len(body)}")
    if len(body) > need:
        raise ParseError(f"trailing data after graph6 bit stream ({len(body) - need} bytes)")
    stream = 0
    for c in body:
        stream = (stream << 6) | (c - 63)
    total = 6 * need
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (stream >> (total - 1 - k)) & 1:
                edges.append((i, j))
            k += 1
    return Graph(range(n), edges)


def emit_graph6(g: Graph, header: bool = False) -> str:
    """Encode ``g`` after relabeling vertices to ``0..n-1`` in ascending order."""
    h = g.relabeled()
    n = len(h)
    out = [_encode_size(n)]
    acc = 0
    count = 0
    for j in range(1, n):
        nbrs = h.neighbors(j)
        for i in range(j):
            acc = (acc << 1) | (i in nbrs)
            count += 1
            if count == 6:
                out.append(chr(acc + 63))
                acc = count = 0
    if count:
        out.append(chr((acc << (6 - count)) + 63))
    return (GRAPH6_HEADER if header else "") + "".join(out)


def detect_format(text: str) -> str:
    """``"edgelist"`` when the first content line is ``u v`` or ``v <id>``, else ``"graph6"``."""
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) == 2 and (parts[0].isdigit() or parts[0] == "v") and parts[1].isdigit():
            return "edgelist"
        return "graph6"
    return "edgelist"


def parse_graph(text: str, fmt: str = "auto") -> Graph:
    if fmt == "auto":
        fmt = detect_format(text)
    if fmt == "edgelist":
        return parse_edge_list(text)
    if fmt == "graph6":
        return parse_graph6(text)
    raise ValueError(f"unknown format {fmt!r}")
