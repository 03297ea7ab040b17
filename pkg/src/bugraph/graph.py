"""Immutable simple undirected graphs on at most 64 vertices.

Adjacency is stored as one integer bitmask per vertex. Distances use ``None``
for unreachable pairs so they can never take part in arithmetic by accident.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DisconnectedGraph, GraphError

MAX_VERTICES = 64

Distances = tuple  # tuple[int | None, ...]


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def reach(adj: Sequence[int], start: int, allowed: int) -> int:
    """Bitmask of vertices reachable from the ``start`` mask inside ``allowed``."""
    seen = start & allowed
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


@dataclass(frozen=True, slots=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour out of range")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    @property
    def max_degree(self) -> int:
        return max(self.degrees())

    @property
    def min_degree(self) -> int:
        return min(self.degrees())

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def is_complete(self) -> bool:
        return self.num_edges == self.n * (self.n - 1) // 2

    def remove_vertices(self, vs: Iterable[int]) -> tuple[Graph, dict[int, int]]:
        drop = set(vs)
        keep = [v for v in range(self.n) if v not in drop]
        return induced_subgraph(self, keep)

    def relabel(self, order: Sequence[int]) -> Graph:
        """Graph whose vertex ``i`` is vertex ``order[i]`` of this graph."""
        pos = {v: i for i, v in enumerate(order)}
        rows = []
        for v in order:
            row = 0
            for u in iter_bits(self.adj[v]):
                row |= 1 << pos[u]
            rows.append(row)
        return Graph(self.n, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 1..{MAX_VERTICES}")
    rows = [0] * n
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {{{u},{v}}} has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def bfs_distances(g: Graph, source: int) -> Distances:
    if not 0 <= source < g.n:
        raise GraphError(f"source {source} outside 0..{g.n - 1}")
    dist: list[int | None] = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in iter_bits(g.adj[x]):
            if dist[y] is None:
                dist[y] = dist[x] + 1
                queue.append(y)
    return tuple(dist)


def distance_matrix(g: Graph) -> tuple[Distances, ...]:
    return tuple(bfs_distances(g, s) for s in range(g.n))


def is_connected(g: Graph) -> bool:
    return reach(g.adj, 1, g.full_mask) == g.full_mask


def diameter(g: Graph) -> int:
    best = 0
    for row in distance_matrix(g):
        if None in row:
            raise DisconnectedGraph("diameter of a disconnected graph is undefined")
        best = max(best, max(row))
    return best


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components, sorted by their minimum vertex."""
    out = []
    left = g.full_mask
    while left:
        comp = reach(g.adj, left & -left, left)
        out.append(frozenset(iter_bits(comp)))
        left &= ~comp
    return out


def induced_subgraph(g: Graph, vs: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``vs`` (kept in increasing order) and the old->new index map."""
    keep = sorted(set(vs))
    if not keep:
        raise GraphError("induced subgraph of an empty vertex set")
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for u in iter_bits(g.adj[v]):
            if u in index:
                row |= 1 << index[u]
        rows.append(row)
    return Graph(len(keep), tuple(rows)), index


def is_cycle_graph(g: Graph) -> bool:
    return g.n >= 3 and all(d == 2 for d in g.degrees()) and is_connected(g)


def all_pairs(vertices: Iterable[int]) -> list[tuple[int, int]]:
    return list(combinations(sorted(vertices), 2))
