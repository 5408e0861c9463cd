"""graph6 encoding and decoding (header-free, printable bytes 63..126).

The format packs the upper triangle of the adjacency matrix in column order
(x01, x02, x12, x03, ...) into 6-bit groups, each offset by 63.  Vertex
counts up to 62 use a single leading byte n+63; counts up to 258047 use a
'~' prefix and three 6-bit digits.  Encodings here are canonical: zero
padding, shortest size form.
"""

from __future__ import annotations

from .graphs import Graph


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position at fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def graph6_encode(g: Graph) -> bytes:
    n = g.n
    if n <= 62:
        head = bytes([n + 63])
    elif n <= 258047:
        head = bytes([126, 63 + ((n >> 12) & 63), 63 + ((n >> 6) & 63), 63 + (n & 63)])
    else:
        raise ValueError(f"graph6 size form for n={n} not supported")
    adj = [[False] * n for _ in range(n)]
    for i, j in g.edges:
        adj[i][j] = True
    out = bytearray(head)
    group = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            group = (group << 1) | (1 if adj[i][j] else 0)
            nbits += 1
            if nbits == 6:
                out.append(63 + group)
                group = 0
                nbits = 0
    if nbits:
        out.append(63 + (group << (6 - nbits)))
    return bytes(out)


def graph6_decode(data: bytes | str) -> Graph:
    if isinstance(data, str):
        try:
            raw = data.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("non-ASCII character", exc.start) from None
    else:
        raw = bytes(data)
    if not raw:
        raise Graph6Error("empty input", 0)
    for pos, byte in enumerate(raw):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte 0x{byte:02x} outside graph6 range 63..126", pos)

    if raw[0] != 126:
        n = raw[0] - 63
        body_start = 1
    else:
        if len(raw) >= 2 and raw[1] == 126:
            raise Graph6Error("size form for n >= 258048 not supported", 1)
        if len(raw) < 4:
            raise Graph6Error("truncated size header", len(raw))
        n = ((raw[1] - 63) << 12) | ((raw[2] - 63) << 6) | (raw[3] - 63)
        body_start = 4

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(raw) - body_start < nbytes:
        raise Graph6Error(
            f"truncated body: need {nbytes} bytes for n={n}", len(raw)
        )
    if len(raw) - body_start > nbytes:
        raise Graph6Error("trailing data after graph body", body_start + nbytes)

    edges = []
    i, j = 0, 1
    for idx in range(nbits):
        byte = raw[body_start + idx // 6] - 63
        bit = (byte >> (5 - idx % 6)) & 1
        if bit:
            edges.append((i, j))
        i += 1
        if i == j:
            i = 0
            j += 1
    # padding bits must be zero for a canonical encoding
    if nbits % 6:
        last = raw[body_start + nbytes - 1] - 63
        mask = (1 << (6 - nbits % 6)) - 1
        if last & mask:
            raise Graph6Error("nonzero padding bits", body_start + nbytes - 1)
    return Graph(n, edges)
