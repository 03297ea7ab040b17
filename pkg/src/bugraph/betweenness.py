"""Exact betweenness centrality on unweighted graphs.

All values are :class:`fractions.Fraction`. Pairs are unordered: a pair
``{s, t}`` is attributed only from the source ``min(s, t)``.

The dependency sweep runs on integers scaled by a common denominator ``L``
(the lcm of every geodesic count), which keeps the inner loop free of
fraction arithmetic while remaining exact.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Iterable

from .errors import DisconnectedGraph, GraphError
from .graph import Graph, iter_bits

Rational = Fraction


@dataclass(frozen=True)
class PathCounts:
    source: int
    sigma: tuple[int, ...]
    dist: tuple[int, ...]
    preds: tuple[tuple[int, ...], ...]
    order: tuple[int, ...]  # vertices in non-decreasing distance from source


@dataclass(frozen=True)
class BetweennessReport:
    vertex_bc: tuple[Fraction, ...]
    edge_bc: dict[tuple[int, int], Fraction]
    adjusted: tuple[Fraction, ...]

    @property
    def spread(self) -> Fraction:
        return max(self.vertex_bc) - min(self.vertex_bc)

    @property
    def uniform(self) -> bool:
        return self.spread == 0


def path_counts(g: Graph, source: int) -> PathCounts:
    if not 0 <= source < g.n:
        raise GraphError(f"source {source} outside 0..{g.n - 1}")
    n = g.n
    dist = [-1] * n
    sigma = [0] * n
    preds: list[list[int]] = [[] for _ in range(n)]
    dist[source] = 0
    sigma[source] = 1
    order = []
    queue = deque([source])
    while queue:
        x = queue.popleft()
        order.append(x)
        for y in iter_bits(g.adj[x]):
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
            if dist[y] == dist[x] + 1:
                sigma[y] += sigma[x]
                preds[y].append(x)
    if len(order) != n:
        raise DisconnectedGraph("betweenness is only defined for connected graphs")
    return PathCounts(source, tuple(sigma), tuple(dist), tuple(map(tuple, preds)), tuple(order))


def all_path_counts(g: Graph) -> list[PathCounts]:
    return [path_counts(g, s) for s in range(g.n)]


def _accumulate(g: Graph, counts: list[PathCounts]):
    n = g.n
    scale = lcm(*(c for pc in counts for c in pc.sigma))
    vnum = [0] * n
    enum_: dict[tuple[int, int], int] = {e: 0 for e in g.edges()}
    for pc in counts:
        s, sigma = pc.source, pc.sigma
        # sigma[w] * below[w] = L * sum over targets t > s of sigma_st(w)/sigma_st;
        # below[w] stays integral because sigma[w] divides L.
        below = [0] * n
        for w in reversed(pc.order):
            child_sum = below[w]
            if w != s:
                vnum[w] += sigma[w] * child_sum
            share = child_sum + (scale // sigma[w] if w > s else 0)
            for v in pc.preds[w]:
                below[v] += share
                enum_[(v, w) if v < w else (w, v)] += sigma[v] * share
    vertex = tuple(Fraction(x, scale) for x in vnum)
    edge = {e: Fraction(x, scale) for e, x in enum_.items()}
    return vertex, edge


def betweenness_report(g: Graph) -> BetweennessReport:
    vertex, edge = _accumulate(g, all_path_counts(g))
    adjusted = [Fraction(0)] * g.n
    for (u, v), value in edge.items():
        adjusted[u] += value
        adjusted[v] += value
    return BetweennessReport(vertex, edge, tuple(adjusted))


def vertex_betweenness(g: Graph) -> tuple[Fraction, ...]:
    return betweenness_report(g).vertex_bc


def edge_betweenness(g: Graph) -> dict[tuple[int, int], Fraction]:
    return betweenness_report(g).edge_bc


def adjusted_betweenness(g: Graph) -> tuple[Fraction, ...]:
    """Sum of edge betweenness over the edges at each vertex.

    Linked to vertex betweenness by ``B(x) = (B_a(x) - n + 1) / 2``.
    """
    return betweenness_report(g).adjusted


class GeodesicTable:
    """All-pairs distances and geodesic counts, for pair-restricted sums."""

    def __init__(self, g: Graph, counts: list[PathCounts] | None = None):
        self.graph = g
        counts = counts if counts is not None else all_path_counts(g)
        self.dist = [pc.dist for pc in counts]
        self.sigma = [pc.sigma for pc in counts]

    def through(self, x: int, y: int, u: int) -> Fraction:
        """Fraction of shortest xy-paths with ``u`` as an interior vertex."""
        if u == x or u == y:
            return Fraction(0)
        d = self.dist
        if d[x][u] + d[u][y] != d[x][y]:
            return Fraction(0)
        return Fraction(self.sigma[x][u] * self.sigma[u][y], self.sigma[x][y])


def pair_induced_betweenness(g: Graph, pairs: Iterable[tuple[int, int]], u: int,
                             table: GeodesicTable | None = None) -> Fraction:
    table = table or GeodesicTable(g)
    return sum((table.through(x, y, u) for x, y in pairs), Fraction(0))


def subset_induced_betweenness(g: Graph, s: Iterable[int], u: int,
                               table: GeodesicTable | None = None) -> Fraction:
    members = sorted(set(s))
    if not members:
        raise GraphError("subset must be nonempty")
    pairs = combinations([x for x in members if x != u], 2)
    return pair_induced_betweenness(g, pairs, u, table)


def average_betweenness(g: Graph, subset: Iterable[int],
                        values: tuple[Fraction, ...] | None = None) -> Fraction:
    members = sorted(set(subset))
    if not members:
        raise GraphError("average over an empty vertex set")
    values = values if values is not None else vertex_betweenness(g)
    return sum((values[u] for u in members), Fraction(0)) / len(members)


def is_betweenness_uniform(g: Graph) -> tuple[bool, Fraction | None]:
    """Exact uniformity test; returns the common value when uniform."""
    values = vertex_betweenness(g)
    if all(v == values[0] for v in values):
        return True, values[0]
    return False, None


def mean_betweenness_via_distance(g: Graph) -> Fraction:
    """Average vertex betweenness computed from the total distance only."""
    n = g.n
    if n == 1:
        return Fraction(0)
    total = sum(sum(pc.dist) for pc in all_path_counts(g))
    return Fraction(n - 1, 2) * (Fraction(total, n * (n - 1)) - 1)
