"""Slow, independent reference implementations used only by the tests.

None of these share code with the package beyond the Graph container: distances
come from Floyd-Warshall, geodesics are listed explicitly by DFS, cuts are found
by trying every vertex subset.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

INF = float("inf")


def floyd_warshall(n: int, edges) -> list[list[float]]:
    d = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in edges:
        d[u][v] = d[v][u] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def _nbrs(n, edges):
    nb = [set() for _ in range(n)]
    for u, v in edges:
        nb[u].add(v)
        nb[v].add(u)
    return nb


def all_geodesics(n: int, edges, s: int, t: int, d=None) -> list[tuple[int, ...]]:
    """Every shortest s-t path as a vertex tuple, by DFS that only steps one closer to t."""
    d = d or floyd_warshall(n, edges)
    if d[s][t] == INF:
        return []
    nb = _nbrs(n, edges)
    out = []

    def walk(path):
        x = path[-1]
        if x == t:
            out.append(tuple(path))
            return
        for y in sorted(nb[x]):
            if d[y][t] == d[x][t] - 1:
                walk(path + [y])

    walk([s])
    return out


def brute_betweenness(n: int, edges) -> tuple[list[Fraction], dict[tuple[int, int], Fraction]]:
    """Vertex and edge betweenness straight from the definition."""
    d = floyd_warshall(n, edges)
    vb = [Fraction(0)] * n
    eb = {tuple(sorted(e)): Fraction(0) for e in edges}
    for s, t in combinations(range(n), 2):
        paths = all_geodesics(n, edges, s, t, d)
        if not paths:
            raise ValueError("disconnected")
        sigma = len(paths)
        for path in paths:
            for x in path[1:-1]:
                vb[x] += Fraction(1, sigma)
            for a, b in zip(path, path[1:]):
                eb[(min(a, b), max(a, b))] += Fraction(1, sigma)
    return vb, eb


def brute_pair_betweenness(n: int, edges, pairs, u: int) -> Fraction:
    d = floyd_warshall(n, edges)
    total = Fraction(0)
    for s, t in pairs:
        if u in (s, t):
            continue
        paths = all_geodesics(n, edges, s, t, d)
        total += Fraction(sum(u in p[1:-1] for p in paths), len(paths))
    return total


def brute_uniform(n: int, edges) -> bool:
    vb, _ = brute_betweenness(n, edges)
    return len(set(vb)) <= 1


def connected_after_removal(n: int, edges, removed) -> bool:
    keep = [v for v in range(n) if v not in removed]
    if not keep:
        return True
    nb = _nbrs(n, edges)
    seen = {keep[0]}
    stack = [keep[0]]
    while stack:
        x = stack.pop()
        for y in nb[x]:
            if y not in seen and y not in removed:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(keep)


def brute_connectivity(n: int, edges) -> int:
    """Smallest vertex set whose removal disconnects; n - 1 for complete graphs."""
    for size in range(n - 1):
        for cut in combinations(range(n), size):
            if not connected_after_removal(n, edges, set(cut)):
                return size
    return n - 1


def brute_two_cuts(n: int, edges) -> list[tuple[int, int]]:
    return [c for c in combinations(range(n), 2) if not connected_after_removal(n, edges, set(c))]


def brute_components(n: int, edges, removed) -> list[frozenset[int]]:
    nb = _nbrs(n, edges)
    left = [v for v in range(n) if v not in removed]
    seen, comps = set(), []
    for s in left:
        if s in seen:
            continue
        comp, stack = {s}, [s]
        while stack:
            x = stack.pop()
            for y in nb[x]:
                if y not in comp and y not in removed:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        comps.append(frozenset(comp))
    return comps
