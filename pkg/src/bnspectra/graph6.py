"""graph6 codec.

Bits of the upper triangle are read column by column, ``(0,1), (0,2), (1,2),
(0,3), ...``, packed six to a byte and offset by 63.
"""

from __future__ import annotations

from .graph import MAX_VERTICES, Graph, GraphError

HEADER = ">>graph6<<"


def _pairs(n: int):
    for j in range(1, n):
        for i in range(j):
            yield i, j


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise GraphError("empty graph6 string")
    bad = [c for c in s if not 63 <= ord(c) <= 126]
    if bad:
        raise GraphError(f"invalid graph6 character {bad[0]!r}")
    data = [ord(c) - 63 for c in s]

    if data[0] != 63:
        n, pos = data[0], 1
    elif len(data) >= 2 and data[1] == 63:
        raise GraphError(f"graph6 8-byte size form exceeds the {MAX_VERTICES}-vertex cap")
    else:
        if len(data) < 4:
            raise GraphError("truncated graph6 size field")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    if n > MAX_VERTICES:
        raise GraphError(f"graph6 vertex count {n} exceeds cap {MAX_VERTICES}")

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = data[pos:]
    if len(payload) < need:
        raise GraphError(f"truncated graph6 payload: expected {need} bytes, got {len(payload)}")
    if len(payload) > need:
        raise GraphError(f"trailing data after graph6 payload ({len(payload) - need} extra bytes)")

    rows = [0] * n
    k = 0
    for i, j in _pairs(n):
        if (payload[k // 6] >> (5 - k % 6)) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        k += 1
    return Graph(n, tuple(rows))


def encode_graph6(g: Graph) -> str:
    if g.n > MAX_VERTICES:
        raise GraphError(f"vertex count {g.n} exceeds cap {MAX_VERTICES}")
    out = [_encode_n(g.n)]
    rows = g.rows
    acc = nb = 0
    for i, j in _pairs(g.n):
        acc = (acc << 1) | ((rows[i] >> j) & 1)
        nb += 1
        if nb == 6:
            out.append(chr(acc + 63))
            acc = nb = 0
    if nb:
        out.append(chr((acc << (6 - nb)) + 63))
    return "".join(out)
