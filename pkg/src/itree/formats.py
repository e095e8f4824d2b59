"""graph6 and plain edge-list serialization."""

from __future__ import annotations

from typing import IO, Iterable, Iterator

from .graph import Graph, GraphError, from_edge_list

GRAPH6_HEADER = b">>graph6<<"
MAX_GRAPH6_N = 258047


class FormatError(GraphError):
    pass


def _encode_n(n: int) -> bytes:
    if n < 0 or n > MAX_GRAPH6_N:
        raise FormatError(f"graph6 supports 0 <= n <= {MAX_GRAPH6_N}, got {n}")
    if n <= 62:
        return bytes([n + 63])
    return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])


def write_graph6(g: Graph) -> bytes:
    """graph6 encoding without header or trailing newline."""
    out = bytearray(_encode_n(g.n))
    nbr = [g.nbrset(v) for v in range(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        nj = nbr[j]
        for i in range(j):
            acc = acc << 1 | (i in nj)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def parse_graph6(text: bytes | str) -> Graph:
    if isinstance(text, str):
        text = text.encode("ascii")
    data = text.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    if not data:
        raise FormatError("empty graph6 string")
    for pos, c in enumerate(data):
        if not 63 <= c <= 126:
            raise FormatError(f"byte {c} at offset {pos} outside 63..126")
    if data[0] < 126:
        n, body = data[0] - 63, data[1:]
    elif len(data) >= 2 and data[1] == 126:
        raise FormatError("8-byte graph6 size header not supported")
    else:
        if len(data) < 4:
            raise FormatError("truncated graph6 size header")
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        if n <= 62:
            raise FormatError(f"non-canonical 4-byte header for n={n}")
        body = data[4:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise FormatError(f"truncated bit vector: need {need} bytes, got {len(body)}")
    if len(body) > need:
        raise FormatError(f"{len(body) - need} trailing bytes after bit vector")
    edges = []
    k = 0
    i, j = 0, 1
    for c in body:
        x = c - 63
        for shift in range(5, -1, -1):
            if k < nbits:
                if x >> shift & 1:
                    edges.append((i, j))
                i += 1
                if i == j:
                    i, j = 0, j + 1
                k += 1
            elif x >> shift & 1:
                raise FormatError("nonzero padding bits")
    return from_edge_list(n, edges)


def iter_graph6(lines: Iterable[bytes | str], skip_errors: bool = False,
                errors: list | None = None) -> Iterator[tuple[int, Graph]]:
    """Yield (line_number, graph) for each non-blank line.

    With skip_errors, malformed lines are appended to `errors` as
    (line_number, message) instead of raising.
    """
    for lineno, line in enumerate(lines, start=1):
        if isinstance(line, str):
            line = line.encode("ascii", errors="replace")
        line = line.strip()
        if not line:
            continue
        try:
            yield lineno, parse_graph6(line)
        except FormatError as exc:
            if not skip_errors:
                raise FormatError(f"line {lineno}: {exc}") from exc
            if errors is not None:
                errors.append((lineno, str(exc)))


def write_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines += [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the "n m" header followed by m "u v" lines."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows:
        raise FormatError("empty edge list")
    try:
        n, m = (int(x) for x in rows[0])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise FormatError(f"malformed edge list: {exc}") from exc
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges, found {len(edges)}")
    return from_edge_list(n, edges)


def read_graph(stream: IO[bytes] | bytes, fmt: str = "auto") -> Graph:
    """Read one graph; 'auto' picks edge-list when the first byte is a digit."""
    data = stream if isinstance(stream, bytes) else stream.read()
    data = data.lstrip()
    if fmt == "auto":
        fmt = "edge-list" if data[:1].isdigit() else "graph6"
    if fmt == "edge-list":
        return parse_edge_list(data.decode("ascii"))
    if fmt == "graph6":
        lines = [ln for ln in data.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise FormatError(f"expected exactly one graph6 line, got {len(lines)}")
        return parse_graph6(lines[0])
    raise FormatError(f"unknown format {fmt!r}")
