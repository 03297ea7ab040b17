"""Vertex connectivity, 2-cuts and the minimal 2-cut decomposition."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import DisconnectedGraph, InvalidCut, NotExactlyTwoConnected
from .graph import Graph, bfs_distances, components, induced_subgraph, is_connected, iter_bits, reach


def local_connectivity(g: Graph, s: int, t: int, cap: int | None = None) -> int:
    """Maximum number of internally vertex-disjoint st-paths for non-adjacent s, t.

    Unit-capacity augmenting paths on the vertex-split digraph; stops early once
    ``cap`` paths are found.
    """
    if g.has_edge(s, t):
        raise ValueError("local connectivity needs non-adjacent endpoints")
    # node 2v = v_in, 2v+1 = v_out; residual capacities in a dict
    res: dict[int, dict[int, int]] = {x: {} for x in range(2 * g.n)}
    big = g.n
    for v in range(g.n):
        res[2 * v][2 * v + 1] = big if v in (s, t) else 1
        res[2 * v + 1][2 * v] = 0
        for u in iter_bits(g.adj[v]):
            res[2 * v + 1][2 * u] = 1
            res[2 * u].setdefault(2 * v + 1, 0)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while cap is None or flow < cap:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            x = queue.popleft()
            for y, c in res[x].items():
                if c > 0 and y not in parent:
                    parent[y] = x
                    queue.append(y)
        if sink not in parent:
            break
        y = sink
        while y != source:
            x = parent[y]
            res[x][y] -= 1
            res[y][x] += 1
            y = x
        flow += 1
    return flow


def vertex_connectivity(g: Graph) -> int:
    """kappa(G); complete graphs get n - 1."""
    if not is_connected(g):
        raise DisconnectedGraph("vertex connectivity is computed for connected graphs only")
    best = min(g.min_degree, g.n - 1)
    i = 0
    # some vertex among the first kappa+1 lies outside a minimum cut
    while i <= best and i < g.n:
        for j in range(i + 1, g.n):
            if not g.has_edge(i, j):
                best = min(best, local_connectivity(g, i, j, cap=best))
        i += 1
    return best


def is_k_connected(g: Graph, k: int) -> bool:
    if g.n <= k:
        return False
    if not is_connected(g):
        return False
    return vertex_connectivity(g) >= k


def _split(g: Graph, p: int, q: int) -> list[frozenset[int]]:
    """Components of G - {p, q} (empty list if nothing remains)."""
    left = g.full_mask & ~(1 << p) & ~(1 << q)
    out = []
    while left:
        comp = reach(g.adj, left & -left, left)
        out.append(frozenset(iter_bits(comp)))
        left &= ~comp
    return out


def all_two_cuts(g: Graph) -> list[tuple[int, int]]:
    if not is_connected(g):
        raise DisconnectedGraph("2-cuts are enumerated for connected graphs only")
    return [(p, q) for p, q in combinations(range(g.n), 2) if len(_split(g, p, q)) >= 2]


@dataclass(frozen=True)
class TwoCutAnalysis:
    p: int
    q: int
    K: frozenset[int]
    Ls: tuple[frozenset[int], ...]
    case_tag: str | None  # "A", "B", or None when neither case applies

    @property
    def k(self) -> int:
        return len(self.K)

    @property
    def L(self) -> frozenset[int]:
        return frozenset().union(*self.Ls)

    @property
    def ell(self) -> int:
        return len(self.L)

    @property
    def kplus(self) -> frozenset[int]:
        return self.K | {self.p, self.q}


def _case_tag(g: Graph, p: int, q: int, K: frozenset[int]) -> str | None:
    if len(K) == 1:
        return "A"
    kmask = sum(1 << v for v in K)
    if (g.adj[p] & kmask).bit_count() >= 2 and (g.adj[q] & kmask).bit_count() >= 2:
        return "B"
    return None


def _smallest(comps: list[frozenset[int]]) -> frozenset[int]:
    return min(comps, key=lambda c: (len(c), sorted(c)))


def analyze_two_cut(g: Graph, p: int, q: int, K: frozenset[int] | None = None) -> TwoCutAnalysis:
    """Analysis of an arbitrary 2-cut; ``K`` defaults to its smallest component."""
    if p == q:
        raise InvalidCut("cut vertices must be distinct")
    p, q = min(p, q), max(p, q)
    comps = _split(g, p, q)
    if len(comps) < 2:
        raise InvalidCut(f"{{{p},{q}}} is not a vertex cut")
    if K is None:
        K = _smallest(comps)
    K = frozenset(K)
    if K not in comps:
        raise InvalidCut(f"{sorted(K)} is not a component of G - {{{p},{q}}}")
    Ls = tuple(c for c in comps if c != K)
    return TwoCutAnalysis(p, q, K, Ls, _case_tag(g, p, q, K))


def minimal_two_cut(g: Graph) -> TwoCutAnalysis:
    """The 2-cut whose smallest component is smallest.

    Ties go to the lexicographically smallest (p, q), then the lexicographically
    smallest component.
    """
    kappa = vertex_connectivity(g)
    if kappa != 2:
        raise NotExactlyTwoConnected(f"graph has connectivity {kappa}, expected 2")
    best = None
    for p, q in combinations(range(g.n), 2):
        comps = _split(g, p, q)
        if len(comps) < 2:
            continue
        K = _smallest(comps)
        key = (len(K), p, q, sorted(K))
        if best is None or key < best[0]:
            best = (key, p, q, K, comps)
    if best is None:
        raise NotExactlyTwoConnected("complete graph has no vertex cut")
    _, p, q, K, comps = best
    return TwoCutAnalysis(p, q, K, tuple(c for c in comps if c != K), _case_tag(g, p, q, K))


def _check_analysis(g: Graph, a: TwoCutAnalysis) -> None:
    comps = set(_split(g, a.p, a.q))
    if comps != {a.K, *a.Ls}:
        raise InvalidCut("analysis does not describe this graph")


def component_analyses(g: Graph, a: TwoCutAnalysis) -> list[tuple[Graph, TwoCutAnalysis]]:
    """One ``(G_i, analysis)`` per component ``L_i``; G_i is induced by K, p, q and L_i."""
    _check_analysis(g, a)
    out = []
    for comp in a.Ls:
        sub, index = induced_subgraph(g, a.kplus | comp)
        p, q = index[a.p], index[a.q]
        K = frozenset(index[v] for v in a.K)
        L = frozenset(index[v] for v in comp)
        out.append((sub, TwoCutAnalysis(min(p, q), max(p, q), K, (L,), _case_tag(sub, p, q, K))))
    return out


def component_subgraphs(g: Graph, a: TwoCutAnalysis) -> list[Graph]:
    return [sub for sub, _ in component_analyses(g, a)]


def k_plus(g: Graph, a: TwoCutAnalysis) -> Graph:
    _check_analysis(g, a)
    return induced_subgraph(g, a.kplus)[0]


def distance_sum(g: Graph, u: int) -> int:
    dist = bfs_distances(g, u)
    if None in dist:
        raise DisconnectedGraph("distance sum over a disconnected graph")
    return sum(dist)


def average_distance_bound(n: int) -> Fraction:
    """Upper bound on the mean distance to a fixed vertex of a 2-connected graph.

    ``n/4`` for even ``n`` and ``n/4 - 1/(4n)`` for odd ``n``; attained by cycles.
    """
    bound = Fraction(n, 4)
    return bound if n % 2 == 0 else bound - Fraction(1, 4 * n)
