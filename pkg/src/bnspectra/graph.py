"""Undirected simple graphs stored as packed adjacency bit rows.

Row ``i`` is a Python int whose bit ``j`` is set iff ``{i, j}`` is an edge.
Neighbourhood intersections are then a single ``&`` plus ``int.bit_count``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 4096
MAX_CYCLE_LENGTH = 12


class GraphError(ValueError):
    """Raised for malformed graph input."""


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]
    m: int = field(default=-1, compare=False)

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        if len(self.rows) != self.n:
            raise GraphError("need exactly one adjacency row per vertex")
        if self.m < 0:
            object.__setattr__(self, "m", sum(r.bit_count() for r in self.rows) // 2)

    @classmethod
    def from_rows(cls, rows: Sequence[int], *, check: bool = True) -> "Graph":
        rows = tuple(rows)
        if check:
            n = len(rows)
            full = (1 << n) - 1
            for i, r in enumerate(rows):
                if r & ~full or r < 0:
                    raise GraphError(f"row {i} references a vertex >= {n}")
                if (r >> i) & 1:
                    raise GraphError(f"self-loop at vertex {i}")
                for j in _bits(r):
                    if not (rows[j] >> i) & 1:
                        raise GraphError(f"adjacency not symmetric at ({i}, {j})")
        return cls(len(rows), rows)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, ordered by ``u`` then ``v``."""
        for u, r in enumerate(self.rows):
            yield from ((u, v) for v in _bits(r >> (u + 1) << (u + 1)))

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def adjacency_matrix(self):
        import numpy as np

        a = np.zeros((self.n, self.n), dtype=np.float64)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1.0
        return a

    def add_edge(self, u: int, v: int) -> "Graph":
        """Return a copy of the graph with ``{u, v}`` added."""
        return from_edge_list(self.n, [*self.edges(), (u, v)])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines of 0-indexed ``"u v"`` pairs."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise GraphError("empty edge-list input")
    try:
        header = [int(x) for x in lines[0]]
        pairs = [(int(a), int(b)) for a, b in lines[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    if len(header) != 2:
        raise GraphError("edge-list header must be 'n m'")
    n, m = header
    if len(pairs) != m:
        raise GraphError(f"header declares {m} edges, found {len(pairs)}")
    return from_edge_list(n, pairs)


def format_edge_list(g: Graph) -> str:
    edges = list(g.edges())
    return "\n".join([f"{g.n} {len(edges)}", *(f"{u} {v}" for u, v in edges)]) + "\n"


def max_triangles_per_edge(g: Graph) -> int:
    """Largest number of triangles through a single edge.

    A graph is B_k-free exactly when this is below k.
    """
    rows = g.rows
    best = 0
    for u, v in g.edges():
        c = (rows[u] & rows[v]).bit_count()
        if c > best:
            best = c
    return best


def has_cycle_of_length(g: Graph, k: int) -> bool:
    """True iff ``g`` contains a ``k``-cycle as a (not necessarily induced) subgraph."""
    if not 3 <= k <= MAX_CYCLE_LENGTH:
        raise GraphError(f"cycle length {k} outside supported range [3, {MAX_CYCLE_LENGTH}]")
    rows = g.rows
    if k > g.n:
        return False
    if k == 3:
        return any(rows[u] & rows[v] for u, v in g.edges())

    # Each cycle is found from its smallest vertex s, walking only through vertices > s.
    for s in range(g.n):
        above = ~((1 << (s + 1)) - 1)
        allowed = rows[s] & above
        if allowed.bit_count() < 2:
            continue
        # stack of (current vertex, used-vertex mask, path length in vertices)
        stack = [(v, (1 << s) | (1 << v), 2) for v in _bits(allowed)]
        while stack:
            v, used, length = stack.pop()
            nxt = rows[v] & above & ~used
            if length == k - 1:
                if nxt & rows[s]:
                    return True
                continue
            for w in _bits(nxt):
                stack.append((w, used | (1 << w), length + 1))
    return False
