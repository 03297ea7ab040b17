"""Named graph families and the diameter-tightness construction."""

from __future__ import annotations

from dataclasses import dataclass

from .connectivity import vertex_connectivity
from .errors import GraphError
from .graph import MAX_VERTICES, Graph, diameter, from_edge_list


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    """Parts are ``[0, a)`` and ``[a, a + b)``."""
    if a < 1 or b < 1:
        raise GraphError("both parts of a complete bipartite graph must be nonempty")
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


@dataclass(frozen=True)
class TightnessParams:
    ell: int
    d: int
    n: int

    @property
    def k(self) -> int:
        return self.ell * (self.d - 4) + 3

    @property
    def w_count(self) -> int:
        return self.n - self.k - 3 * self.ell + 1

    def validate(self) -> None:
        if self.ell < 2:
            raise GraphError("ell must be at least 2")
        if self.d < 5:
            raise GraphError("target diameter must be at least 5")
        if self.w_count < 0:
            raise GraphError(f"n={self.n} too small: need n >= k + 3*ell - 1 = {self.k + 3 * self.ell - 1}")
        if self.n > MAX_VERTICES:
            raise GraphError(f"n={self.n} exceeds {MAX_VERTICES}")


def tightness_construction(params: TightnessParams, check: bool = True, variant: str = "layered") -> Graph:
    """Graph with max degree n - k, connectivity >= ell and diameter floor((k-3)/ell) + 4.

    Vertex 0 is u; the interiors of the ell disjoint u-v paths follow in
    path-major order; then v; then the extra vertices joined to every midpoint.
    Every midpoint y_i is joined to all x_j, all z_j and every other midpoint.

    ``variant="literal"`` adds only those midpoint edges to the bare paths, which
    leaves degree-2 path vertices and so is not ell-connected once ell >= 3.
    The default ``"layered"`` variant makes every two consecutive distance layers
    from u complete bipartite (the midpoint edges are the middle instance of
    this), which keeps the layers, the degrees of the y_i and the diameter.
    """
    params.validate()
    if variant not in ("layered", "literal"):
        raise GraphError(f"unknown construction variant {variant!r}")
    ell, d = params.ell, params.d
    u = 0
    v = 1 + ell * (d - 1)

    def layer(step: int) -> list[int]:
        if step == 0:
            return [u]
        if step == d:
            return [v]
        return [1 + i * (d - 1) + (step - 1) for i in range(ell)]

    edges = []
    if variant == "layered":
        for s in range(d):
            edges += [(a, b) for a in layer(s) for b in layer(s + 1)]
    else:
        for i in range(ell):
            chain = [u] + [layer(s)[i] for s in range(1, d)] + [v]
            edges += list(zip(chain, chain[1:]))
    mid = d // 2
    ys, xs, zs = layer(mid), layer(mid - 1), layer(mid + 1)
    for i, y in enumerate(ys):
        edges += [(y, x) for x in xs]
        edges += [(y, z) for z in zs]
        edges += [(y, y2) for y2 in ys[i + 1:]]
    ws = range(v + 1, v + 1 + params.w_count)
    edges += [(y, w) for y in ys for w in ws]
    g = from_edge_list(params.n, edges)
    if check:
        problems = check_tightness(g, params)
        if problems:
            raise AssertionError("construction self-check failed: " + "; ".join(problems))
    return g


def tightness_bound(n: int, max_degree: int, ell: int) -> int:
    k = n - max_degree
    return (k - 3) // ell + 4


def check_tightness(g: Graph, params: TightnessParams) -> list[str]:
    """Postcondition violations (empty when the construction meets the bound with equality)."""
    problems = []
    if g.max_degree != params.n - params.k:
        problems.append(f"max degree {g.max_degree} != n - k = {params.n - params.k}")
    kappa = vertex_connectivity(g)
    if kappa < params.ell:
        problems.append(f"connectivity {kappa} < ell = {params.ell}")
    expected = (params.k - 3) // params.ell + 4
    if diameter(g) != expected:
        problems.append(f"diameter {diameter(g)} != {expected}")
    return problems
