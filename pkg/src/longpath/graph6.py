"""Bit-exact graph6 reader/writer for interchange with standard generators.

Only the short form (single size byte, n <= 62) is handled; this artifact
never processes graphs above 16 vertices.  The decoder is strict: wrong
length, out-of-range characters, and nonzero padding bits are all errors
carrying the byte offset of the offending character.
"""
from __future__ import annotations

from typing import IO, Iterator

from .graphs import MAX_VERTICES, SmallGraph

HEADER = ">>graph6<<"


class Graph6FormatError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def encode_graph6(g: SmallGraph) -> str:
    """Standard graph6 line for ``g`` (without the trailing newline)."""
    if g.n > 62:
        raise ValueError("graph6 short form only supports n <= 62")
    out = [chr(63 + g.n)]
    group = 0
    nbits = 0
    for col in range(1, g.n):
        for row in range(col):
            group = group << 1 | (g.adj[row] >> col & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + group))
                group = nbits = 0
    if nbits:
        out.append(chr(63 + (group << (6 - nbits))))
    return "".join(out)


def decode_graph6(line: str | bytes) -> SmallGraph:
    """Inverse of :func:`encode_graph6`; raises on any malformation."""
    if isinstance(line, bytes):
        line = line.decode("ascii", errors="replace")
    base = 0
    if line.startswith(HEADER):
        base = len(HEADER)
        line = line[base:]
    line = line.rstrip("\r\n")
    if not line:
        raise Graph6FormatError("empty graph6 record", base)
    if line[0] == ":":
        raise Graph6FormatError("sparse6 record, not graph6", base)
    first = ord(line[0])
    if first == 126:
        raise Graph6FormatError("extended size prefix unsupported", base)
    if not 63 <= first <= 126:
        raise Graph6FormatError(f"size byte {first} out of range", base)
    n = first - 63
    if n == 0 or n > MAX_VERTICES:
        raise Graph6FormatError(f"order {n} outside supported range [1, {MAX_VERTICES}]", base)
    nbits = n * (n - 1) // 2
    body_len = (nbits + 5) // 6
    if len(line) - 1 < body_len:
        raise Graph6FormatError(
            f"record too short: need {body_len} body bytes, got {len(line) - 1}",
            base + len(line),
        )
    if len(line) - 1 > body_len:
        raise Graph6FormatError("trailing bytes after graph6 record", base + 1 + body_len)
    adj = [0] * n
    bit = 0
    pairs = [(row, col) for col in range(1, n) for row in range(col)]
    for k, ch in enumerate(line[1:]):
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise Graph6FormatError(f"character {ch!r} out of graph6 range", base + 1 + k)
        for shift in range(5, -1, -1):
            if bit >= nbits:
                if val >> shift & 1:
                    raise Graph6FormatError("nonzero padding bits", base + 1 + k)
                continue
            if val >> shift & 1:
                row, col = pairs[bit]
                adj[row] |= 1 << col
                adj[col] |= 1 << row
            bit += 1
    return SmallGraph(n, tuple(adj))


def iter_graph6(stream: IO[str]) -> Iterator[SmallGraph]:
    """Decode a graph6 stream, one record per line.

    Blank lines and sparse6 records are skipped; the optional format
    header is tolerated on any line.
    """
    for raw in stream:
        line = raw.rstrip("\r\n")
        if line.startswith(HEADER):
            line = line[len(HEADER):]
        if not line:
            continue
        if line[0] == ":":
            continue
        yield decode_graph6(line)


def write_graph6(stream: IO[str], graphs) -> int:
    count = 0
    for g in graphs:
        stream.write(encode_graph6(g) + "\n")
        count += 1
    return count
