"""File formats: graph6 (bit-exact), whitespace edge lists, and JSON
certificates.

Edge lists are one ``u v`` pair per line, 0-based, with ``#`` comments; an
optional ``n <count>`` header pins the vertex count (otherwise it is the
largest id plus one). Certificates are canonical JSON: sorted keys, newline
terminated.
"""

from __future__ import annotations

import json
from pathlib import Path
from .core import Graph, GraphError, Multigraph, from_edge_list


class FormatError(ValueError):
    """Malformed input; ``offset`` is the byte offset when known."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


# -- graph6 ------------------------------------------------------------------------

_HEADER = ">>graph6<<"


def _decode_n(data: bytes) -> tuple[int, int]:
    """(n, bytes consumed); validates the size header."""
    if not data:
        raise FormatError("empty graph6 payload", 0)
    b0 = data[0]
    if not 63 <= b0 <= 126:
        raise FormatError(f"invalid graph6 byte {b0}", 0)
    if b0 != 126:
        return b0 - 63, 1
    if len(data) < 2:
        raise FormatError("truncated graph6 size", len(data))
    if data[1] != 126:
        if len(data) < 4:
            raise FormatError("truncated graph6 size", len(data))
        chunk = data[1:4]
        n = 0
        for i, byte in enumerate(chunk):
            if not 63 <= byte <= 126:
                raise FormatError(f"invalid graph6 byte {byte}", 1 + i)
            n = (n << 6) | (byte - 63)
        return n, 4
    if len(data) < 8:
        raise FormatError("truncated graph6 size", len(data))
    chunk = data[2:8]
    n = 0
    for i, byte in enumerate(chunk):
        if not 63 <= byte <= 126:
            raise FormatError(f"invalid graph6 byte {byte}", 2 + i)
        n = (n << 6) | (byte - 63)
    return n, 8


def decode_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line into a graph."""
    if isinstance(text, str):
        data = text.strip().encode("ascii", errors="strict")
    else:
        data = text.strip()
    if data.startswith(_HEADER.encode()):
        data = data[len(_HEADER) :]
    n, used = _decode_n(data)
    body = data[used:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise FormatError(
            f"graph6 body too short: need {need} bytes, have {len(body)}",
            used + len(body),
        )
    if len(body) > need:
        raise FormatError("trailing bytes after graph6 body", used + need)
    bits: list[int] = []
    for i, byte in enumerate(body):
        if not 63 <= byte <= 126:
            raise FormatError(f"invalid graph6 byte {byte}", used + i)
        val = byte - 63
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return from_edge_list(n, edges)


def encode_graph6(g: Graph, header: bool = False) -> str:
    """Encode a graph as one graph6 line (no trailing newline)."""
    n = g.n
    if n > 68719476735:
        raise GraphError("graph too large for graph6")
    if n <= 62:
        prefix = chr(n + 63)
    elif n <= 258047:
        prefix = chr(126) + "".join(
            chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0)
        )
    else:
        prefix = chr(126) * 2 + "".join(
            chr(((n >> shift) & 63) + 63) for shift in (30, 24, 18, 12, 6, 0)
        )
    bits: list[int] = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = "".join(
        chr(sum(bit << shift for bit, shift in zip(bits[k : k + 6], range(5, -1, -1))) + 63)
        for k in range(0, len(bits), 6)
    )
    return (_HEADER if header else "") + prefix + body


# -- edge lists ----------------------------------------------------------------------


def parse_edgelist(text: str, multigraph: bool = False) -> Graph | Multigraph:
    """Parse a whitespace edge list; duplicate pairs collapse unless multigraph."""
    edges: list[tuple[int, int]] = []
    n_decl: int | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n" and len(parts) == 2:
            n_decl = int(parts[1])
            continue
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer vertex in {raw!r}")
        if u < 0 or v < 0:
            raise FormatError(f"line {lineno}: negative vertex id in {raw!r}")
        edges.append((u, v))
    n = n_decl if n_decl is not None else (max((max(e) for e in edges), default=-1) + 1)
    if multigraph:
        return Multigraph.build(n, edges)
    return from_edge_list(n, edges)


def format_edgelist(g: Graph | Multigraph) -> str:
    lines = [f"n {g.n}"]
    if isinstance(g, Multigraph):
        lines.extend(f"{u} {v}" for u, v in g.edges)
    else:
        lines.extend(f"{u} {v}" for u, v in sorted(g.edges()))
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path, fmt: str = "auto") -> Graph:
    """Read a graph file in graph6 or edge-list form."""
    path = Path(path)
    text = path.read_text()
    return parse_graph(text, fmt, name=str(path))


def parse_graph(text: str, fmt: str = "auto", name: str = "<input>") -> Graph:
    if fmt == "auto":
        fmt = "graph6" if name.endswith((".g6", ".graph6")) else _sniff(text)
    if fmt == "graph6":
        return decode_graph6(text)
    if fmt == "edgelist":
        g = parse_edgelist(text)
        assert isinstance(g, Graph)
        return g
    raise FormatError(f"unknown format {fmt!r}")


def _sniff(text: str) -> str:
    stripped = text.strip()
    if stripped.startswith(_HEADER):
        return "graph6"
    first = stripped.splitlines()[0].strip() if stripped else ""
    if first and " " not in first and not first.startswith(("n", "#")):
        return "graph6"
    return "edgelist"


# -- certificates ---------------------------------------------------------------------


def certificate_json(cert: dict) -> str:
    return json.dumps(cert, sort_keys=True, indent=2, default=_jsonify) + "\n"


def _jsonify(obj):
    if isinstance(obj, frozenset):
        return sorted(obj)
    if isinstance(obj, (set, tuple)):
        return list(obj)
    raise TypeError(f"not JSON-serializable: {type(obj)}")


def write_certificate(path: str | Path, cert: dict) -> None:
    Path(path).write_text(certificate_json(cert))
