"""Reading and writing graphs: graph6, plain edge lists and DIMACS ``.col``."""

from __future__ import annotations

from .graph import Graph

__all__ = [
    "GraphFormatError",
    "parse_graph6",
    "encode_graph6",
    "parse_edge_list",
    "parse_dimacs",
]

_HEADER = ">>graph6<<"
_MAX_ENCODE_N = 62


class GraphFormatError(ValueError):
    """Malformed graph text.  ``offset`` is the byte (or line) position at fault."""

    def __init__(self, message: str, offset: int | None = None) -> None:
        self.offset = offset
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)


def parse_graph6(text: str) -> Graph:
    """Decode a single graph6 line.

    Accepts the optional ``>>graph6<<`` header and the 4-byte ``~`` size
    header; surrounding whitespace is ignored.
    """
    s = text.strip()
    base = 0
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
        base = len(_HEADER)
    if not s:
        raise GraphFormatError("empty graph6 string", base)
    for k, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"character {ch!r} out of graph6 range", base + k)
    data = [ord(ch) - 63 for ch in s]
    if data[0] == 63:
        if len(data) < 4 or data[1] == 63:
            raise GraphFormatError("truncated or unsupported extended size header", base)
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        start = 4
    else:
        n = data[0]
        start = 1
    if n < 1:
        raise GraphFormatError("graph6 encodes zero vertices; graphs need n >= 1", base)

    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    body = data[start:]
    if len(body) != expected:
        raise GraphFormatError(
            f"length header says n={n} ({expected} data bytes), found {len(body)}",
            base + start + min(len(body), expected),
        )
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte, bit = divmod(k, 6)
            if body[byte] >> (5 - bit) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    pad = expected * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise GraphFormatError("nonzero padding bits", base + start + expected - 1)
    return Graph(n, tuple(rows))


def encode_graph6(g: Graph) -> str:
    """Encode ``g`` as graph6 (no header line); supports ``n <= 62``."""
    if not 1 <= g.n <= _MAX_ENCODE_N:
        raise ValueError(f"graph6 encoding supports 1 <= n <= {_MAX_ENCODE_N}, got {g.n}")
    out = [chr(g.n + 63)]
    acc = 0
    count = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            count += 1
            if count == 6:
                out.append(chr(acc + 63))
                acc = count = 0
    if count:
        out.append(chr((acc << (6 - count)) + 63))
    return "".join(out)


def parse_edge_list(text: str) -> Graph:
    """Parse ``n <count>`` followed by one ``u v`` pair per line (0-based).

    Blank lines and ``#`` comments are skipped; duplicate edges collapse.
    Error offsets are 1-based line numbers.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise GraphFormatError("first line must be 'n <count>'", lineno)
            n = _int(parts[1], lineno)
            if n < 1:
                raise GraphFormatError("vertex count must be >= 1", lineno)
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}", lineno)
        u, v = _int(parts[0], lineno), _int(parts[1], lineno)
        _check_edge(u, v, n, lineno)
        edges.append((u, v))
    if n is None:
        raise GraphFormatError("missing 'n <count>' header", 1)
    return Graph.from_edges(n, edges)


def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS ``.col`` text: ``p edge n m`` then ``e u v`` lines, 1-based."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if len(parts) < 3 or n is not None:
                raise GraphFormatError("bad or repeated problem line", lineno)
            n = _int(parts[2], lineno)
            if n < 1:
                raise GraphFormatError("vertex count must be >= 1", lineno)
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError("edge before problem line", lineno)
            if len(parts) != 3:
                raise GraphFormatError(f"expected 'e u v', got {raw.strip()!r}", lineno)
            u, v = _int(parts[1], lineno) - 1, _int(parts[2], lineno) - 1
            _check_edge(u, v, n, lineno)
            edges.append((u, v))
        else:
            raise GraphFormatError(f"unknown line type {parts[0]!r}", lineno)
    if n is None:
        raise GraphFormatError("missing 'p edge n m' line", 1)
    return Graph.from_edges(n, edges)


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"not an integer: {token!r}", lineno) from None


def _check_edge(u: int, v: int, n: int, lineno: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise GraphFormatError(f"vertex index out of range in edge ({u}, {v})", lineno)
    if u == v:
        raise GraphFormatError(f"loop edge ({u}, {u}) not allowed", lineno)
