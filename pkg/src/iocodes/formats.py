"""Graph serialization: plain edge-list text and the graph6 format.

Edge lists are one ``u v`` pair per line with ``#`` comments; the vertex
count is implied by the largest index unless a ``n <count>`` header line
is present.  graph6 packs the upper triangle of the adjacency matrix
column by column into 6-bit groups offset by 63.
"""

from __future__ import annotations

from .errors import BadParam, ParseError
from .graphs import Graph

__all__ = [
    "parse_edge_list",
    "emit_edge_list",
    "parse_graph6",
    "emit_graph6",
    "load_graph",
]


def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text into a graph."""
    edges = []
    declared_n = None
    max_seen = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n" and len(parts) == 2:
            try:
                declared_n = int(parts[1])
            except ValueError:
                raise ParseError(f"bad vertex count {parts[1]!r}", line=lineno)
            continue
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", line=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer endpoint in {line!r}", line=lineno)
        if u < 0 or v < 0:
            raise ParseError(f"negative vertex in {line!r}", line=lineno)
        if u == v:
            raise ParseError(f"self-loop {u} {v}", line=lineno)
        edges.append((u, v))
        max_seen = max(max_seen, u, v)
    n = declared_n if declared_n is not None else max_seen + 1
    if n < max_seen + 1:
        raise ParseError(f"declared n={n} smaller than largest index {max_seen}")
    return Graph(max(n, 0), edges)


def emit_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def _g6_order_bytes(n: int) -> bytes:
    if n < 0:
        raise BadParam(f"negative order {n}")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes(
            [126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
        )
    raise BadParam(f"order {n} too large for this graph6 writer")


def emit_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 string (no header)."""
    out = bytearray(_g6_order_bytes(g.n))
    bits = []
    for col in range(1, g.n):
        column = g.adj[col]
        for row in range(col):
            bits.append((column >> row) & 1)
    for i in range(0, len(bits), 6):
        group = bits[i : i + 6]
        group += [0] * (6 - len(group))
        value = 0
        for b in group:
            value = (value << 1) | b
        out.append(value + 63)
    return out.decode("ascii")


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (optional ``>>graph6<<`` header)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise ParseError("empty graph6 string")
    data = s.encode("ascii", errors="replace")
    pos = 0
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise ParseError("graph6 orders above 258047 unsupported", position=0)
        if len(data) < 4:
            raise ParseError("truncated graph6 order", position=0)
        n = 0
        for i in range(1, 4):
            c = data[i] - 63
            if not 0 <= c <= 63:
                raise ParseError(f"invalid graph6 byte {data[i]}", position=i)
            n = (n << 6) | c
        pos = 4
    else:
        n = data[0] - 63
        if not 0 <= n <= 62:
            raise ParseError(f"invalid graph6 order byte {data[0]}", position=0)
        pos = 1
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - pos != need:
        raise ParseError(
            f"graph6 body length {len(data) - pos}, expected {need}", position=pos
        )
    bits = []
    for i in range(pos, len(data)):
        c = data[i] - 63
        if not 0 <= c <= 63:
            raise ParseError(f"invalid graph6 byte {data[i]}", position=i)
        for shift in range(5, -1, -1):
            bits.append((c >> shift) & 1)
    edges = []
    idx = 0
    for col in range(1, n):
        for row in range(col):
            if bits[idx]:
                edges.append((row, col))
            idx += 1
    if any(bits[nbits:]):
        raise ParseError("nonzero padding bits in graph6 body", position=pos)
    return Graph(n, edges)


def load_graph(text: str) -> Graph:
    """Parse either format, deciding by shape of the first payload line."""
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty graph input")
    first = stripped.splitlines()[0].strip()
    if first.startswith(">>graph6<<"):
        return parse_graph6(stripped)
    tokens = first.split("#", 1)[0].split()
    if tokens and all(tok.isdigit() or tok == "n" for tok in tokens):
        return parse_edge_list(text)
    return parse_graph6(stripped)
