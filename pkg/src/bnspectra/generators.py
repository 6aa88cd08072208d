"""Deterministic graph families and exhaustive labeled enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator

from .graph import MAX_VERTICES, Graph, GraphError, from_edge_list

FAMILIES = (
    "complete",
    "cycle",
    "path",
    "book",
    "fan",
    "stacked_planar",
    "gnp",
    "petersen",
    "kneser",
    "complete_multipartite",
)

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 generator; identical streams on every platform."""

    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound


@dataclass(frozen=True)
class GeneratorSpec:
    """A family tag plus its parameters.

    ``args`` per family: complete/cycle/path/fan/stacked_planar ``(n,)``,
    book ``(k,)``, gnp ``(n, p)``, petersen ``()``, kneser ``(a, b)``,
    complete_multipartite ``(part sizes...)``. ``seed`` is used by the
    random families only.
    """

    family: str
    args: tuple = ()
    seed: int = 0

    def validate(self) -> None:
        f, a = self.family, self.args

        def need(count: int) -> None:
            if len(a) != count:
                raise GraphError(f"{f} takes {count} parameter(s), got {len(a)}")

        def vertices(n: object, lo: int) -> None:
            if not isinstance(n, int) or not lo <= n <= MAX_VERTICES:
                raise GraphError(f"{f}: n must be an integer in [{lo}, {MAX_VERTICES}], got {n!r}")

        if f not in FAMILIES:
            raise GraphError(f"unknown family {f!r}; choose from {', '.join(FAMILIES)}")
        if not 0 <= self.seed <= _MASK64:
            raise GraphError("seed must be an unsigned 64-bit integer")
        if f in ("complete", "path"):
            need(1)
            vertices(a[0], 1)
        elif f == "cycle":
            need(1)
            vertices(a[0], 3)
        elif f == "fan":
            need(1)
            vertices(a[0], 3)
        elif f == "stacked_planar":
            need(1)
            vertices(a[0], 4)
        elif f == "book":
            need(1)
            if not isinstance(a[0], int) or a[0] < 1 or a[0] + 2 > MAX_VERTICES:
                raise GraphError(f"book: k must be an integer >= 1, got {a[0]!r}")
        elif f == "gnp":
            need(2)
            vertices(a[0], 1)
            if not 0.0 <= float(a[1]) <= 1.0:
                raise GraphError(f"gnp: p must lie in [0, 1], got {a[1]!r}")
        elif f == "petersen":
            need(0)
        elif f == "kneser":
            need(2)
            na, nb = a
            if not (isinstance(na, int) and isinstance(nb, int) and 1 <= nb <= na):
                raise GraphError(f"kneser: need integers 1 <= b <= a, got {a!r}")
            if comb(na, nb) > MAX_VERTICES:
                raise GraphError("kneser: too many vertices")
        elif f == "complete_multipartite":
            if not a or any(not isinstance(x, int) or x < 1 for x in a):
                raise GraphError("complete_multipartite: part sizes must be positive integers")
            if sum(a) > MAX_VERTICES:
                raise GraphError("complete_multipartite: too many vertices")

    @classmethod
    def parse(cls, text: str, seed: int = 0) -> "GeneratorSpec":
        """Parse ``family[:arg,arg,...]``, e.g. ``gnp:10,0.5`` or ``book:3``."""
        family, _, rest = text.partition(":")
        args: list = []
        for tok in filter(None, (t.strip() for t in rest.split(","))):
            try:
                args.append(int(tok))
            except ValueError:
                try:
                    args.append(float(tok))
                except ValueError:
                    raise GraphError(f"bad generator parameter {tok!r}") from None
        spec = cls(family.strip(), tuple(args), seed)
        spec.validate()
        return spec


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << i) for i in range(n)))


def cycle(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def book(k: int) -> Graph:
    # hubs 0 and 1, pages 2..k+1
    edges = [(0, 1)] + [(h, p) for p in range(2, k + 2) for h in (0, 1)]
    return from_edge_list(k + 2, edges)


def fan(n: int) -> Graph:
    # apex 0 over the path 1..n-1
    edges = [(0, i) for i in range(1, n)] + [(i, i + 1) for i in range(1, n - 1)]
    return from_edge_list(n, edges)


def stacked_planar(n: int, seed: int) -> Graph:
    rng = SplitMix64(seed)
    edges = list(combinations(range(4), 2))
    faces = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    for v in range(4, n):
        i = rng.below(len(faces))
        a, b, c = faces[i]
        faces[i] = (a, b, v)
        faces.extend([(a, c, v), (b, c, v)])
        edges.extend([(a, v), (b, v), (c, v)])
    return from_edge_list(n, edges)


def gnp(n: int, p: float, seed: int) -> Graph:
    rng = SplitMix64(seed)
    edges = [(i, j) for j in range(1, n) for i in range(j) if rng.random() < p]
    return from_edge_list(n, edges)


def kneser(a: int, b: int) -> Graph:
    verts = [frozenset(c) for c in combinations(range(a), b)]
    edges = [(i, j) for i, j in combinations(range(len(verts)), 2) if not verts[i] & verts[j]]
    return from_edge_list(len(verts), edges)


def petersen() -> Graph:
    return kneser(5, 2)


def complete_multipartite(parts: tuple[int, ...]) -> Graph:
    label = [i for i, size in enumerate(parts) for _ in range(size)]
    n = len(label)
    edges = [(u, v) for u, v in combinations(range(n), 2) if label[u] != label[v]]
    return from_edge_list(n, edges)


def generate(spec: GeneratorSpec) -> Graph:
    spec.validate()
    f, a = spec.family, spec.args
    if f == "complete":
        return complete(a[0])
    if f == "cycle":
        return cycle(a[0])
    if f == "path":
        return path(a[0])
    if f == "book":
        return book(a[0])
    if f == "fan":
        return fan(a[0])
    if f == "stacked_planar":
        return stacked_planar(a[0], spec.seed)
    if f == "gnp":
        return gnp(a[0], float(a[1]), spec.seed)
    if f == "petersen":
        return petersen()
    if f == "kneser":
        return kneser(a[0], a[1])
    return complete_multipartite(tuple(a))


MAX_ENUMERATION_N = 6


def labeled_graph(n: int, mask: int) -> Graph:
    """Graph whose edge set is bit ``e`` of ``mask`` for the ``e``-th pair in graph6 order."""
    rows = [0] * n
    e = 0
    for j in range(1, n):
        for i in range(j):
            if (mask >> e) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            e += 1
    return Graph(n, tuple(rows))


def enumerate_all_labeled_graphs(n: int, start: int = 0, stop: int | None = None) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices, by increasing edge bitmask.

    ``start``/``stop`` select a slice of the mask range so workers can share it.
    """
    if not 1 <= n <= MAX_ENUMERATION_N:
        raise GraphError(f"exhaustive enumeration supports 1 <= n <= {MAX_ENUMERATION_N}, got {n}")
    total = 1 << (n * (n - 1) // 2)
    stop = total if stop is None else min(stop, total)
    for mask in range(start, stop):
        yield labeled_graph(n, mask)


def corpus_size(n: int) -> int:
    return 1 << (n * (n - 1) // 2)
