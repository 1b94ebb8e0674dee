"""Graph interchange formats: graph6, sparse6 (read-only), edge lists, and
plain-text rotation-system files for plane embeddings.

graph6/sparse6 follow the published format specification bit-exactly
(printable bytes 63..126, column-major upper triangle for graph6).
"""

from __future__ import annotations

from typing import Iterable

from .graph import Graph

GRAPH6_HEADER = b">>graph6<<"
SPARSE6_HEADER = b">>sparse6<<"


class FormatError(ValueError):
    """Malformed input for one of the supported graph formats."""


def _as_bytes(text: bytes | str) -> bytes:
    if isinstance(text, str):
        try:
            return text.encode("ascii")
        except UnicodeEncodeError as exc:
            raise FormatError(f"non-ASCII input: {exc}") from None
    return text


def _check_data_bytes(data: bytes, what: str) -> None:
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise FormatError(f"invalid {what} byte 0x{b:02x} at position {i}")


def _parse_order(data: bytes) -> tuple[int, bytes]:
    """Decode the N(n) prefix, returning (n, remaining bytes)."""
    if not data:
        raise FormatError("empty input, expected order field")
    if data[0] != 126:
        return data[0] - 63, data[1:]
    if len(data) < 2:
        raise FormatError("truncated order field")
    if data[1] != 126:
        if len(data) < 4:
            raise FormatError("truncated 3-byte order field")
        n = 0
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
        if n < 63:
            raise FormatError(f"non-canonical long order field for n={n}")
        return n, data[4:]
    if len(data) < 8:
        raise FormatError("truncated 6-byte order field")
    n = 0
    for b in data[2:8]:
        n = (n << 6) | (b - 63)
    if n < 258048:
        raise FormatError(f"non-canonical extra-long order field for n={n}")
    return n, data[8:]


def _emit_order(n: int) -> bytes:
    if n < 0:
        raise FormatError("order must be nonnegative")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    if n <= 68719476735:
        parts = [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
        return bytes([126, 126] + [p + 63 for p in parts])
    raise FormatError("order too large for graph6")


def parse_graph6(text: bytes | str) -> Graph:
    """Decode one graph6 line into a Graph (labels are "0".."n-1")."""
    data = _as_bytes(text).strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    if data.startswith(b":"):
        raise FormatError("input is sparse6, not graph6 (use parse_sparse6)")
    if not data:
        raise FormatError("empty graph6 input")
    _check_data_bytes(data, "graph6")
    n, body = _parse_order(data)
    if n < 1:
        raise FormatError("graph6 requires n >= 1")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise FormatError(
            f"graph6 body for n={n} needs {need} bytes, got {len(body)}")
    adj = [0] * n
    bit = 0
    for b in body:
        group = b - 63
        for k in range(5, -1, -1):
            if bit >= nbits:
                if (group >> k) & 1:
                    raise FormatError("nonzero padding bits in graph6 body")
                bit += 1
                continue
            if (group >> k) & 1:
                # column-major upper triangle: bit index -> (i, j)
                j = _column_of(bit)
                i = bit - j * (j - 1) // 2
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bit += 1
    return Graph(tuple(str(i) for i in range(n)), tuple(adj))


def _column_of(bit: int) -> int:
    # largest j with j*(j-1)/2 <= bit
    j = int(((8 * bit + 1) ** 0.5 + 1) / 2)
    while j * (j - 1) // 2 > bit:
        j -= 1
    while (j + 1) * j // 2 <= bit:
        j += 1
    return j


def emit_graph6(g: Graph) -> bytes:
    """Encode the given labeling of g as one graph6 line (no trailing newline)."""
    n = g.n
    if n < 1:
        raise FormatError("graph6 requires n >= 1")
    out = bytearray(_emit_order(n))
    group = 0
    nbits = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            group = (group << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(group + 63)
                group = 0
                nbits = 0
    if nbits:
        out.append((group << (6 - nbits)) + 63)
    return bytes(out)


def parse_sparse6(text: bytes | str) -> Graph:
    """Decode one sparse6 line. Multi-edges/loops in the stream are rejected."""
    data = _as_bytes(text).strip()
    if data.startswith(SPARSE6_HEADER):
        data = data[len(SPARSE6_HEADER):]
    if not data.startswith(b":"):
        raise FormatError("sparse6 input must start with ':'")
    data = data[1:]
    _check_data_bytes(data, "sparse6")
    n, body = _parse_order(data)
    if n < 1:
        raise FormatError("sparse6 requires n >= 1")
    k = max(1, (n - 1).bit_length())
    stream = 0
    nbits = 0
    for b in body:
        stream = (stream << 6) | (b - 63)
        nbits += 6
    adj = [0] * n
    v = 0
    pos = nbits
    while pos >= k + 1:
        pos -= 1
        bflag = (stream >> pos) & 1
        pos -= k
        x = (stream >> pos) & ((1 << k) - 1)
        if bflag:
            v += 1
        if v >= n:
            break
        if x > v:
            v = x
        else:
            if x == v:
                raise FormatError(f"sparse6 stream encodes a loop at vertex {v}")
            if adj[x] & (1 << v):
                raise FormatError(f"sparse6 stream repeats edge ({x}, {v})")
            adj[x] |= 1 << v
            adj[v] |= 1 << x
    return Graph(tuple(str(i) for i in range(n)), tuple(adj))


def parse_auto(text: bytes | str) -> Graph:
    """Decode graph6 or sparse6, dispatching on the leading byte/header."""
    data = _as_bytes(text).strip()
    if data.startswith(SPARSE6_HEADER) or data.startswith(b":"):
        return parse_sparse6(data)
    return parse_graph6(data)


# -- edge lists --------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse a plain edge list: first line "n", then "u v" lines (labels ok)."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise FormatError("empty edge list")
    header = lines[0].split()
    if len(header) == 1 and header[0].isdigit():
        n = int(header[0])
        labels = [str(i) for i in range(n)]
        body = lines[1:]
    else:
        raise FormatError("edge list must start with a vertex-count line")
    index = {l: i for i, l in enumerate(labels)}
    edges = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"bad edge line: {ln!r}")
        try:
            u, v = index.get(parts[0]), index.get(parts[1])
            if u is None:
                u = int(parts[0])
            if v is None:
                v = int(parts[1])
        except ValueError:
            raise FormatError(f"unknown vertex in edge line: {ln!r}") from None
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise FormatError(f"bad edge line: {ln!r}")
        edges.append((u, v))
    return Graph.from_edges(n, edges, labels)


def emit_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


# -- rotation-system (embedding) files ---------------------------------------

def parse_rotation_file(text: str) -> tuple[Graph, list[list[int]], int]:
    """Parse an embedding file.

    Layout: a header line "<n> <face_count>", then one line per vertex,
    "v: w1 w2 ... wk", listing v's neighbors in clockwise order. Returns
    (graph, rotations, declared_face_count); face validation lives in the
    planarity module.
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise FormatError("empty embedding file")
    header = lines[0].split()
    if len(header) != 2:
        raise FormatError("embedding header must be '<n> <face_count>'")
    try:
        n, fcount = int(header[0]), int(header[1])
    except ValueError:
        raise FormatError("embedding header must be two integers") from None
    rows: dict[int, list[int]] = {}
    for ln in lines[1:]:
        if ":" not in ln:
            raise FormatError(f"bad rotation line (missing ':'): {ln!r}")
        left, right = ln.split(":", 1)
        try:
            v = int(left)
            nbrs = [int(tok) for tok in right.split()]
        except ValueError:
            raise FormatError(f"bad rotation line: {ln!r}") from None
        if v in rows:
            raise FormatError(f"duplicate rotation line for vertex {v}")
        rows[v] = nbrs
    if sorted(rows) != list(range(n)):
        raise FormatError(f"rotation lines must cover vertices 0..{n - 1}")
    edges = []
    for v, nbrs in rows.items():
        if len(set(nbrs)) != len(nbrs):
            raise FormatError(f"rotation of vertex {v} repeats a neighbor")
        for u in nbrs:
            if not 0 <= u < n:
                raise FormatError(f"rotation of vertex {v} references vertex {u}")
            if u == v:
                raise FormatError(f"rotation of vertex {v} lists itself")
            edges.append((v, u))
    g = Graph.from_edges(n, edges)
    for v, nbrs in rows.items():
        if set(nbrs) != set(g.neighbors(v)):
            raise FormatError(f"rotation of vertex {v} is not a neighbor permutation")
    rotations = [rows[v] for v in range(n)]
    return g, rotations, fcount


def emit_rotation_file(rotations: Iterable[Iterable[int]], face_count: int) -> str:
    rot = [list(r) for r in rotations]
    lines = [f"{len(rot)} {face_count}"]
    for v, nbrs in enumerate(rot):
        lines.append(f"{v}: " + " ".join(str(u) for u in nbrs))
    return "\n".join(lines) + "\n"
