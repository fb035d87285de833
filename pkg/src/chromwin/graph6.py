"""graph6 encoding (https://users.cecs.anu.edu.au/~bdm/data/formats.txt).

Short (n <= 62) and 4-byte (n <= 258047) size headers are supported.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import Graph, GraphError, pair_list

HEADER = ">>graph6<<"


class Graph6Error(GraphError):
    pass


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise Graph6Error("graph6 supports at most 258047 vertices here")


def encode_graph6(g: Graph) -> str:
    out = [_encode_n(g.n)]
    acc = nbits = 0
    for i, j in pair_list(g.n):
        acc = (acc << 1) | (g.adj[i] >> j & 1)
        nbits += 1
        if nbits == 6:
            out.append(chr(acc + 63))
            acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"bad graph6 character {ch!r}")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] < 63:
        n, body = vals[0], vals[1:]
    else:
        if len(vals) < 4 or vals[1] == 63:
            raise Graph6Error("malformed graph6 length header")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        if n <= 62:
            raise Graph6Error("malformed graph6 length header")
        body = vals[4:]
    pairs = pair_list(n)
    need = (len(pairs) + 5) // 6
    if len(body) != need:
        kind = "trailing garbage" if len(body) > need else "truncated data"
        raise Graph6Error(f"graph6 {kind}: expected {need} data bytes, got {len(body)}")
    adj = [0] * n
    for k, (i, j) in enumerate(pairs):
        if body[k // 6] >> (5 - k % 6) & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    pad = 6 * need - len(pairs)
    if pad and body[-1] & ((1 << pad) - 1):
        raise Graph6Error("graph6 padding bits must be zero")
    return Graph(n, tuple(adj))


def read_graph6_stream(lines: Iterable[str] | TextIO) -> Iterator[Graph]:
    for line in lines:
        if line.strip():
            yield parse_graph6(line)


def write_graph6_stream(graphs: Iterable[Graph], fh: TextIO) -> None:
    for g in graphs:
        fh.write(encode_graph6(g) + "\n")
