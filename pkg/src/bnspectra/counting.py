"""Exact triangle counts and clique numbers."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph, _bits
from .spectral import Spectrum

TRACE_RESIDUAL_LIMIT = 0.01
DEFAULT_CLIQUE_BUDGET = 10**7


class CountingError(RuntimeError):
    pass


class CliqueBudgetExceeded(RuntimeError):
    def __init__(self, best: int, nodes: int) -> None:
        super().__init__(f"clique search budget exhausted after {nodes} nodes; omega >= {best}")
        self.best = best
        self.nodes = nodes


def triangles_by_intersection(g: Graph) -> int:
    rows = g.rows
    total = 0
    for u, v in g.edges():
        total += (rows[u] & rows[v]).bit_count()
    return total // 3


def triangles_by_neighborhood(g: Graph) -> int:
    """One third of the total edge count over all induced neighbourhoods."""
    rows = g.rows
    total = 0
    for v in range(g.n):
        nbhd = rows[v]
        # each edge inside N(v) is seen from both endpoints
        inside = sum((rows[u] & nbhd).bit_count() for u in _bits(nbhd))
        if inside % 2:
            raise CountingError(f"odd degree sum inside N({v})")
        total += inside // 2
    if total % 3:
        raise CountingError(f"neighbourhood edge total {total} not divisible by 3")
    return total // 3


def triangles_by_trace(s: Spectrum) -> tuple[int, float]:
    """Nearest integer to the cube sum over six, and the rounding residual."""
    raw = float(np.sum(s.values**3)) / 6.0
    t = round(raw)
    residual = abs(raw - t)
    if residual > TRACE_RESIDUAL_LIMIT:
        raise CountingError(f"trace residual {residual:.3g} exceeds {TRACE_RESIDUAL_LIMIT}; eigensolver inaccurate")
    return int(t), residual


@dataclass(frozen=True)
class TriangleReport:
    by_intersection: int
    by_neighborhood: int
    by_trace: int
    trace_residual: float

    @property
    def agree(self) -> bool:
        return self.by_intersection == self.by_neighborhood == self.by_trace


def triangle_report(g: Graph, s: Spectrum) -> TriangleReport:
    t_tr, res = triangles_by_trace(s)
    return TriangleReport(triangles_by_intersection(g), triangles_by_neighborhood(g), t_tr, res)


def degeneracy_order(g: Graph) -> list[int]:
    """Repeated removal of a minimum-degree vertex, lowest index first on ties."""
    rows = list(g.rows)
    deg = [r.bit_count() for r in rows]
    alive = set(range(g.n))
    order = []
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        order.append(v)
        alive.remove(v)
        for u in _bits(rows[v]):
            if u in alive:
                deg[u] -= 1
    return order


@dataclass(frozen=True)
class CliqueResult:
    omega: int
    exact: bool
    nodes: int
    witness: tuple[int, ...]


def max_clique(g: Graph, budget: int = DEFAULT_CLIQUE_BUDGET) -> CliqueResult:
    """Maximum clique via Bron-Kerbosch with pivoting over a degeneracy ordering.

    The outer loop walks vertices in degeneracy order, restricting candidates to
    later neighbours; the inner search uses an explicit stack and Tomita-style
    pivoting with a size bound. If ``budget`` search nodes are spent the result
    is the best clique found so far with ``exact=False``.
    """
    if g.n == 0:
        return CliqueResult(0, True, 0, ())
    rows = g.rows
    order = degeneracy_order(g)
    best: tuple[int, ...] = (0,)
    nodes = 0
    later_mask = [0] * g.n
    acc = 0
    for v in reversed(order):
        later_mask[v] = acc
        acc |= 1 << v

    for v in order:
        cand = rows[v] & later_mask[v]
        if cand.bit_count() + 1 <= len(best):
            continue
        stack = [((v,), cand, 0)]
        while stack:
            nodes += 1
            if nodes > budget:
                return CliqueResult(len(best), False, nodes - 1, best)
            r, p, x = stack.pop()
            if not p:
                if len(r) > len(best):
                    best = r
                continue
            if len(r) + p.bit_count() <= len(best):
                continue
            px = p | x
            pivot = max(_bits(px), key=lambda u: (rows[u] & p).bit_count())
            for u in _bits(p & ~rows[pivot]):
                stack.append((r + (u,), p & rows[u], x & rows[u]))
                p &= ~(1 << u)
                x |= 1 << u
    return CliqueResult(len(best), True, nodes, tuple(sorted(best)))


def clique_number(g: Graph, budget: int = DEFAULT_CLIQUE_BUDGET) -> int:
    res = max_clique(g, budget)
    if not res.exact:
        raise CliqueBudgetExceeded(res.omega, res.nodes)
    return res.omega


def triangle_budget_ok(g: Graph, fp) -> bool:
    """Membership test ``t(G) <= c * m**(1.5 - eps)`` for a :class:`FamilyParams`."""
    if g.m < 1:
        raise ValueError("triangle budget needs at least one edge")
    return triangles_by_intersection(g) <= fp.c * g.m ** (1.5 - fp.epsilon)
