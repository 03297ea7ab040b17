"""Discrepancy between the average betweenness of a 2-cut and of a component.

Pair sets are the primitive: ``disc`` restricted to a pair set ``P`` compares
the averages of pair-induced betweenness over ``{p, q}`` and over ``K``.
The vertex-subset reading is the special case ``P = pairs within S``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable

from .betweenness import GeodesicTable, average_betweenness, pair_induced_betweenness, vertex_betweenness
from .connectivity import TwoCutAnalysis, analyze_two_cut, component_analyses
from .errors import GraphError, InvalidCut
from .graph import Graph, bfs_distances

Pair = tuple[int, int]


@dataclass(frozen=True)
class DiscrepancyBreakdown:
    total: Fraction
    part_kplus: Fraction
    part_l: Fraction
    part_cross: Fraction

    @property
    def parts_sum(self) -> Fraction:
        return self.part_kplus + self.part_l + self.part_cross

    @property
    def consistent(self) -> bool:
        return self.total == self.parts_sum


def disc(g: Graph, p: int, q: int, K: Iterable[int], values: tuple[Fraction, ...] | None = None) -> Fraction:
    """Average betweenness of ``{p, q}`` minus that of the component ``K``."""
    a = analyze_two_cut(g, p, q, frozenset(K))
    values = values if values is not None else vertex_betweenness(g)
    return average_betweenness(g, (a.p, a.q), values) - average_betweenness(g, a.K, values)


def disc_over_pairs(g: Graph, pairs: Iterable[Pair], p: int, q: int, K: Iterable[int],
                    table: GeodesicTable | None = None) -> Fraction:
    table = table or GeodesicTable(g)
    pairs = list(pairs)
    K = sorted(K)
    cut = sum((pair_induced_betweenness(g, pairs, u, table) for u in (p, q)), Fraction(0))
    comp = sum((pair_induced_betweenness(g, pairs, u, table) for u in K), Fraction(0))
    return cut / 2 - comp / len(K)


def pair_classes(a: TwoCutAnalysis) -> tuple[list[Pair], list[Pair], list[Pair]]:
    """Pairs within K+, pairs within L, and K+ x L pairs (each pair sorted)."""
    kplus = sorted(a.kplus)
    L = sorted(a.L)
    cross = [(min(x, y), max(x, y)) for x, y in product(kplus, L)]
    return list(combinations(kplus, 2)), list(combinations(L, 2)), cross


def disc_breakdown(g: Graph, a: TwoCutAnalysis, table: GeodesicTable | None = None,
                   values: tuple[Fraction, ...] | None = None) -> DiscrepancyBreakdown:
    table = table or GeodesicTable(g)
    kk, ll, cross = pair_classes(a)
    if len(kk) + len(ll) + len(cross) != g.n * (g.n - 1) // 2:
        raise InvalidCut("analysis does not cover every vertex of the graph")
    return DiscrepancyBreakdown(
        total=disc(g, a.p, a.q, a.K, values),
        part_kplus=disc_over_pairs(g, kk, a.p, a.q, a.K, table),
        part_l=disc_over_pairs(g, ll, a.p, a.q, a.K, table),
        part_cross=disc_over_pairs(g, cross, a.p, a.q, a.K, table),
    )


@dataclass(frozen=True)
class DiscReport:
    analysis: TwoCutAnalysis
    whole: DiscrepancyBreakdown
    per_component: tuple[tuple[Graph, TwoCutAnalysis, DiscrepancyBreakdown], ...]


def disc_report(g: Graph, a: TwoCutAnalysis) -> DiscReport:
    """Whole-graph breakdown plus one breakdown per ``G_i`` when L is disconnected."""
    per = []
    for sub, sub_a in component_analyses(g, a):
        per.append((sub, sub_a, disc_breakdown(sub, sub_a)))
    return DiscReport(a, disc_breakdown(g, a), tuple(per))


def alpha_profile(g: Graph, p: int, q: int, K: Iterable[int] = ()) -> dict[int, int]:
    """``d(w, p) - d(w, q)`` for every ``w`` outside ``{p, q}`` and ``K``."""
    dp, dq = bfs_distances(g, p), bfs_distances(g, q)
    if None in dp:
        raise GraphError("alpha profile needs a connected graph")
    skip = {p, q, *K}
    return {w: dp[w] - dq[w] for w in range(g.n) if w not in skip}


def _check_case_a(g: Graph, p: int, q: int, v: int) -> None:
    if g.has_edge(p, q):
        raise InvalidCut(f"{p} and {q} are adjacent")
    if g.adj[v] != (1 << p | 1 << q):
        raise InvalidCut(f"vertex {v} is not a degree-2 vertex with neighbours {{{p},{q}}}")
    analyze_two_cut(g, p, q, frozenset({v}))


def proposition1_contribution(g: Graph, p: int, q: int, v: int, w: int,
                              table: GeodesicTable | None = None) -> Fraction:
    """Measured discrepancy over the pairs joining ``w`` to ``p``, ``q`` and ``v``."""
    _check_case_a(g, p, q, v)
    if w in (p, q, v):
        raise GraphError("w must lie outside {p, q, v}")
    pairs = [(min(x, w), max(x, w)) for x in (p, q, v)]
    return disc_over_pairs(g, pairs, p, q, (v,), table)


def proposition1_formula(g: Graph, p: int, q: int, w: int, table: GeodesicTable | None = None) -> Fraction:
    """Closed form predicted from ``alpha(w)`` and the geodesic counts to p and q."""
    table = table or GeodesicTable(g)
    alpha = table.dist[w][p] - table.dist[w][q]
    s_wp, s_wq = table.sigma[w][p], table.sigma[w][q]
    if abs(alpha) <= 1:
        return Fraction(1, 2)
    if alpha == -2:
        return (1 - Fraction(s_wp, s_wq)) / 2
    if alpha == 2:
        return (1 - Fraction(s_wq, s_wp)) / 2
    return Fraction(0)


def proposition1_general(g: Graph, p: int, q: int, w: int, table: GeodesicTable | None = None) -> Fraction:
    """Closed form that also accounts for pq-geodesics avoiding the degree-2 vertex.

    With ``m`` shortest pq-paths, the w-q geodesics through the nearer cut vertex
    number ``sigma(w, near) * m`` and only ``sigma(w, near)`` of them use v, so the
    |alpha| = 2 branch becomes ``1/2 + sigma(w, near) * (m - 2) / (2 sigma(w, far))``.
    Reduces to :func:`proposition1_formula` when ``m == 1``.
    """
    table = table or GeodesicTable(g)
    alpha = table.dist[w][p] - table.dist[w][q]
    if abs(alpha) != 2:
        return proposition1_formula(g, p, q, w, table)
    near, far = (p, q) if alpha < 0 else (q, p)
    m = table.sigma[p][q]
    return Fraction(1, 2) + Fraction(table.sigma[w][near] * (m - 2), 2 * table.sigma[w][far])


def disc_pq_pair(g: Graph, p: int, q: int, v: int, table: GeodesicTable | None = None) -> Fraction:
    """Discrepancy carried by the single pair ``{p, q}``; -1 iff p-v-q is the only geodesic."""
    _check_case_a(g, p, q, v)
    return disc_over_pairs(g, [(min(p, q), max(p, q))], p, q, (v,), table)
