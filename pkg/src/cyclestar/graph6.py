"""graph6 encoding and decoding.

The format packs the upper-triangle adjacency bits x(0,1), x(0,2),
x(1,2), x(0,3), ... six per byte, each byte offset by 63, zero-padded
to a byte boundary.  The order is encoded as a single byte 63+n for
n <= 62, as 126 followed by three 6-bit bytes for n <= 258047, and as
126 126 followed by six 6-bit bytes beyond that.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .graphs import Graph

_HEADER = b">>graph6<<"


class Graph6Error(ValueError):
    """Raised for malformed graph6 input."""


def to_graph6(g: Graph) -> bytes:
    n = g.order
    out = bytearray(_encode_order(n))
    acc = 0
    nbits = 0
    for v in range(1, n):
        row = g.neighbor_mask(v)
        for u in range(v):
            acc = acc << 1 | (row >> u & 1)
            nbits += 1
            if nbits == 6:
                out.append(63 + acc)
                acc = 0
                nbits = 0
    if nbits:
        out.append(63 + (acc << (6 - nbits)))
    return bytes(out)


def from_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(_HEADER):
        data = data[len(_HEADER):]
    if not data:
        raise Graph6Error("empty graph6 string")
    for b in data:
        if b < 63 or b > 126:
            raise Graph6Error(f"byte {b} outside graph6 range 63..126")
    n, pos = _decode_order(data)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos != nbytes:
        raise Graph6Error(
            f"expected {nbytes} adjacency bytes for order {n}, got {len(data) - pos}"
        )
    rows = [0] * n
    bit = 0
    for b in data[pos:]:
        chunk = b - 63
        for k in range(5, -1, -1):
            if bit >= nbits:
                if chunk >> k & 1:
                    raise Graph6Error("nonzero padding bits")
                continue
            if chunk >> k & 1:
                u, v = _bit_position(bit)
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            bit += 1
    return Graph(n, tuple(rows))


def _bit_position(bit: int) -> tuple[int, int]:
    # Inverse of the column-major upper-triangle order: column v holds
    # bits v(v-1)/2 .. v(v-1)/2 + v - 1.
    v = int(((8 * bit + 1) ** 0.5 + 1) / 2)
    while v * (v - 1) // 2 > bit:
        v -= 1
    while (v + 1) * v // 2 <= bit:
        v += 1
    return bit - v * (v - 1) // 2, v


def _encode_order(n: int) -> bytes:
    if n < 0:
        raise Graph6Error(f"negative order {n}")
    if n <= 62:
        return bytes([63 + n])
    if n <= 258047:
        return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    if n <= 68719476735:
        return bytes([126, 126] + [63 + (n >> s & 63) for s in (30, 24, 18, 12, 6, 0)])
    raise Graph6Error(f"order {n} too large for graph6")


def _decode_order(data: bytes) -> tuple[int, int]:
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated long-form order")
        n = 0
        for b in data[2:8]:
            n = n << 6 | (b - 63)
        return n, 8
    if len(data) < 4:
        raise Graph6Error("truncated long-form order")
    n = 0
    for b in data[1:4]:
        n = n << 6 | (b - 63)
    return n, 4


def write_graph6_lines(graphs: Iterable[Graph]) -> bytes:
    """One graph per line, newline-terminated ASCII."""
    return b"".join(to_graph6(g) + b"\n" for g in graphs)


def read_graph6_lines(data: bytes | str) -> Iterator[Graph]:
    if isinstance(data, str):
        data = data.encode("ascii")
    for line in data.splitlines():
        line = line.strip()
        if line:
            yield from_graph6(line)
