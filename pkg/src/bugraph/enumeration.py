"""Isomorph-free generation of small connected graphs.

Canonical forms come from a pruned permutation search: vertices are first
split by colour refinement, positions are filled cell by cell, and a prefix is
abandoned as soon as its upper-triangle bits exceed the best prefix seen.
Interchangeable twin vertices are explored only once.

Generation is by canonical augmentation: a connected graph on n vertices is
produced from the connected graph obtained by deleting its canonically chosen
non-cut vertex, so each isomorphism class has exactly one parent class.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, IO, Iterable, Iterator

from .betweenness import is_betweenness_uniform
from .connectivity import is_k_connected
from .errors import TooLarge
from .graph import Graph, is_connected, iter_bits, reach
from .graph6 import Graph6Record, encode_graph6, read_graph6

CANON_MAX_N = 10
DEFAULT_GEN_MAX_N = 9


@dataclass(frozen=True, order=True)
class CanonicalForm:
    n: int
    bits: int  # upper triangle in graph6 column order, first bit most significant

    def bitstring(self) -> str:
        width = self.n * (self.n - 1) // 2
        return format(self.bits, f"0{width}b") if width else ""


def refine_colors(g: Graph) -> list[int]:
    """Stable colour refinement started from degrees; colour ids are isomorphism-invariant."""
    n, adj = g.n, g.adj
    colors = [row.bit_count() for row in adj]
    ranks = sorted(set(colors))
    colors = [ranks.index(c) for c in colors]
    count = len(ranks)
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in iter_bits(adj[v])))) for v in range(n)]
        order = sorted(set(sigs))
        if len(order) == count:
            return colors
        index = {s: i for i, s in enumerate(order)}
        colors = [index[s] for s in sigs]
        count = len(order)


def _twin_masks(g: Graph) -> list[int]:
    """For each v, the mask of lower-indexed vertices u such that swapping u, v is an automorphism."""
    adj = g.adj
    out = []
    for v in range(g.n):
        m = 0
        for u in range(v):
            if adj[u] & ~(1 << v) == adj[v] & ~(1 << u):
                m |= 1 << u
        out.append(m)
    return out


def canonical_labeling(g: Graph, colors: list[int] | None = None) -> tuple[CanonicalForm, tuple[int, ...]]:
    """Canonical form and a labeling achieving it (``labeling[i]`` is the vertex put at position i)."""
    n, adj = g.n, g.adj
    if n > CANON_MAX_N:
        raise TooLarge(f"canonical forms are limited to {CANON_MAX_N} vertices")
    colors = colors if colors is not None else refine_colors(g)
    cells: dict[int, int] = {}
    for v, c in enumerate(colors):
        cells[c] = cells.get(c, 0) | 1 << v
    cell_at = []
    for c in sorted(cells):
        cell_at.extend([cells[c]] * cells[c].bit_count())
    twins = _twin_masks(g)

    states: list[tuple[tuple[int, ...], int]] = [((), (1 << n) - 1)]
    bits = 0
    for i in range(n):
        best = None
        nxt: list[tuple[tuple[int, ...], int]] = []
        for placed, remaining in states:
            cand = cell_at[i] & remaining
            for v in iter_bits(cand):
                if twins[v] & cand:
                    continue
                row = adj[v]
                col = 0
                for x in placed:
                    col = col << 1 | (row >> x & 1)
                if best is None or col < best:
                    best = col
                    nxt = [(placed + (v,), remaining & ~(1 << v))]
                elif col == best:
                    nxt.append((placed + (v,), remaining & ~(1 << v)))
        bits = bits << i | best
        states = nxt
    return CanonicalForm(n, bits), states[0][0]


def canonical_form(g: Graph) -> CanonicalForm:
    return canonical_labeling(g)[0]


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_labeling(g)[1])


def _non_cut_mask(adj: tuple[int, ...], n: int) -> int:
    full = (1 << n) - 1
    out = 0
    for v in range(n):
        rest = full & ~(1 << v)
        if rest == 0 or reach(adj, rest & -rest, rest) == rest:
            out |= 1 << v
    return out


def _children(parent: Graph, parent_form: CanonicalForm) -> list[tuple[CanonicalForm, Graph]]:
    m = parent.n
    n = m + 1
    seen: set[CanonicalForm] = set()
    out = []
    for s in range(1, 1 << m):
        adj = tuple(row | ((s >> v & 1) << m) for v, row in enumerate(parent.adj)) + (s,)
        child = Graph.__new__(Graph)
        object.__setattr__(child, "n", n)
        object.__setattr__(child, "adj", adj)
        colors = refine_colors(child)
        nc = _non_cut_mask(adj, n)
        top = max(colors[x] for x in iter_bits(nc))
        if colors[m] != top:
            continue
        form, lab = canonical_labeling(child, colors)
        if form in seen:
            continue
        w = next(x for x in reversed(lab) if nc >> x & 1 and colors[x] == top)
        if w != m and not (adj[w] & ~(1 << m) == adj[m] & ~(1 << w)):
            if canonical_form(child.remove_vertices([w])[0]) != parent_form:
                continue
        seen.add(form)
        out.append((form, child.relabel(lab)))
    return out


def generation_cap() -> int:
    return int(os.environ.get("BUGRAPH_MAX_N", DEFAULT_GEN_MAX_N))


@lru_cache(maxsize=None)
def _connected_level(n: int) -> tuple[tuple[CanonicalForm, Graph], ...]:
    if n == 1:
        g = Graph(1, (0,))
        return ((canonical_form(g), g),)
    out = []
    for form, parent in _connected_level(n - 1):
        out.extend(_children(parent, form))
    out.sort(key=lambda item: item[0])
    return tuple(out)


def generate_connected(n: int) -> Iterator[Graph]:
    """One canonically labeled representative per class of connected graphs on n vertices."""
    if n < 1 or n > min(generation_cap(), CANON_MAX_N):
        raise TooLarge(f"in-process generation supports 1 <= n <= {generation_cap()} (set BUGRAPH_MAX_N to raise)")
    for _, g in _connected_level(n):
        yield g


@dataclass(frozen=True)
class CorpusFilter:
    """Conjunction of corpus predicates; ``custom`` callables must all return true."""

    connected: bool = False
    two_connected: bool = False
    betweenness_uniform: bool = False
    min_degree: int | None = None
    custom: tuple[Callable[[Graph], bool], ...] = field(default=())

    def __call__(self, g: Graph) -> bool:
        needs_connected = self.connected or self.two_connected or self.betweenness_uniform
        if needs_connected and not is_connected(g):
            return False
        if self.min_degree is not None and g.min_degree < self.min_degree:
            return False
        if self.two_connected and not is_k_connected(g, 2):
            return False
        if self.betweenness_uniform and not is_betweenness_uniform(g)[0]:
            return False
        return all(pred(g) for pred in self.custom)

    @classmethod
    def parse(cls, spec: str | None) -> CorpusFilter:
        """Build from a comma list such as ``"two_connected,min_degree=3"``."""
        kwargs: dict = {}
        for item in filter(None, (s.strip() for s in (spec or "").split(","))):
            key, _, value = item.partition("=")
            key = key.replace("-", "_")
            if key in ("uniform", "bu"):
                key = "betweenness_uniform"
            if key == "min_degree":
                kwargs[key] = int(value)
            elif key in ("connected", "two_connected", "betweenness_uniform"):
                kwargs[key] = True
            else:
                raise ValueError(f"unknown filter {item!r}")
        return cls(**kwargs)


def stream_graph6(source: str | os.PathLike | IO[str], flt: CorpusFilter | None = None) -> Iterator[Graph6Record]:
    """Lazily decode a graph6 file or stream, yielding records that pass ``flt``."""
    flt = flt or CorpusFilter()
    if hasattr(source, "read"):
        for rec in read_graph6(source):
            if flt(rec.graph):
                yield rec
        return
    with open(source) as fh:
        yield from stream_graph6(fh, flt)


def count_by_predicate(n: int, flt: CorpusFilter) -> tuple[int, list[str]]:
    witnesses = [encode_graph6(g) for g in generate_connected(n) if flt(g)]
    return len(witnesses), witnesses


def labeled_graphs(n: int) -> Iterable[Graph]:
    """Every labeled graph on n vertices (2^(n choose 2) of them); test-scale only."""
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for k, (i, j) in enumerate(pairs):
            if mask >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        yield Graph(n, tuple(rows))
