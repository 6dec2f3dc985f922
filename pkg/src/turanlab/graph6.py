"""graph6 encoding and decoding.

The size header is ``63 + n`` for ``n <= 62``; larger graphs use byte 126
followed by three 6-bit groups.  The body lists the upper triangle in
column order ``x(0,1), x(0,2), x(1,2), x(0,3), ...``, padded with zeros
to a multiple of six bits, each group offset by 63.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from .graph import MAX_VERTICES, Graph, GraphError

HEADER = b">>graph6<<"


class Graph6Error(GraphError):
    """Malformed graph6 data."""


def _encode_size(n: int) -> bytes:
    if n <= 62:
        return bytes([63 + n])
    if n <= 258047:
        return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    raise Graph6Error(f"size {n} not representable")


def graph6_encode(G: Graph) -> bytes:
    out = bytearray(_encode_size(G.n))
    acc = 0
    nbits = 0
    for j in range(1, G.n):
        row = G.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(63 + acc)
                acc = nbits = 0
    if nbits:
        out.append(63 + (acc << (6 - nbits)))
    return bytes(out)


def graph6_decode(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    if not data:
        raise Graph6Error("empty graph6 string")
    for byte in data:
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte} outside the graph6 range 63..126")
    if data[0] == 126:
        if len(data) < 4 or data[1] == 126:
            raise Graph6Error("unsupported or truncated size header")
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    if n > MAX_VERTICES:
        raise Graph6Error(f"{n} vertices exceeds the capacity of {MAX_VERTICES}")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise Graph6Error(f"expected {need} body bytes for n={n}, found {len(body)}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    total_bits = 6 * len(body)
    for k2 in range(k, total_bits):
        if (body[k2 // 6] - 63) >> (5 - k2 % 6) & 1:
            raise Graph6Error("nonzero padding bits")
    return Graph(n, tuple(rows))


def write_graph6_file(path: str | Path, graphs: Iterable[Graph]) -> int:
    """Write one graph6 line per graph; returns the number written."""
    count = 0
    with open(path, "wb") as fh:
        for G in graphs:
            fh.write(graph6_encode(G) + b"\n")
            count += 1
    return count


def read_graph6_file(path: str | Path) -> Iterator[Graph]:
    with open(path, "rb") as fh:
        for line in fh:
            line = line.strip()
            if line:
                yield graph6_decode(line)
