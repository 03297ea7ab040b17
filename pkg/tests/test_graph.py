import pytest
from hypothesis import given

from bugraph.constructions import complete, cycle, path, petersen
from bugraph.errors import DisconnectedGraph, GraphError
from bugraph.graph import (Graph, bfs_distances, components, diameter, from_edge_list, induced_subgraph,
                           is_connected, is_cycle_graph)

from conftest import graphs
from oracles import INF, floyd_warshall


def test_small_constructions():
    k3 = from_edge_list(3, [(0, 1), (1, 2), (0, 2)])
    assert k3.is_complete() and k3.num_edges == 3
    k1 = from_edge_list(1, [])
    assert k1.n == 1 and k1.num_edges == 0
    c4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert is_cycle_graph(c4) and c4 == cycle(4)


@pytest.mark.parametrize("n, edges", [
    (0, []),
    (65, []),
    (3, [(0, 0)]),
    (3, [(0, 3)]),
    (3, [(-1, 2)]),
])
def test_rejects_bad_input(n, edges):
    with pytest.raises(GraphError):
        from_edge_list(n, edges)


def test_rejects_asymmetric_rows():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))


def test_duplicate_edges_collapse():
    g = from_edge_list(3, [(0, 1), (1, 0), (0, 1)])
    assert g.edges() == [(0, 1)]


def test_bfs_examples():
    assert bfs_distances(cycle(5), 0) == (0, 1, 2, 2, 1)
    for v in range(4):
        assert sorted(bfs_distances(complete(4), v)) == [0, 1, 1, 1]
    assert bfs_distances(path(4), 0) == (0, 1, 2, 3)


def test_unreachable_is_none():
    g = from_edge_list(4, [(0, 1), (2, 3)])
    assert bfs_distances(g, 0) == (0, 1, None, None)


def test_diameter_examples():
    assert diameter(cycle(6)) == 3
    for n in range(2, 9):
        assert diameter(complete(n)) == 1
    assert diameter(petersen()) == 2
    with pytest.raises(DisconnectedGraph):
        diameter(from_edge_list(4, [(0, 1), (2, 3)]))


def test_diameter_of_cycles():
    for n in range(3, 65):
        assert diameter(cycle(n)) == n // 2


def test_connectivity_examples():
    assert is_connected(cycle(5))
    assert not is_connected(from_edge_list(4, [(0, 1), (2, 3)]))
    assert is_connected(from_edge_list(1, []))


def test_induced_subgraph_examples():
    sub, index = induced_subgraph(cycle(5), {0, 1, 2})
    assert sub == path(3) and index == {0: 0, 1: 1, 2: 2}
    k4 = complete(4)
    sub, index = induced_subgraph(k4, range(4))
    assert sub == k4 and index == {v: v for v in range(4)}
    assert induced_subgraph(k4, {0, 1})[0] == complete(2)
    with pytest.raises(GraphError):
        induced_subgraph(k4, [])


def test_components_examples():
    assert components(cycle(6)) == [frozenset(range(6))]
    c3_c4 = from_edge_list(7, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 3)])
    assert sorted(len(c) for c in components(c3_c4)) == [3, 4]
    assert components(from_edge_list(3, [])) == [frozenset({0}), frozenset({1}), frozenset({2})]


def test_cycle_recognition():
    assert is_cycle_graph(cycle(7))
    assert not is_cycle_graph(complete(4))
    assert not is_cycle_graph(path(5))
    two_triangles = from_edge_list(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert not is_cycle_graph(two_triangles)


@given(graphs(max_n=10))
def test_bfs_matches_floyd_warshall(g):
    fw = floyd_warshall(g.n, g.edges())
    for s in range(g.n):
        got = bfs_distances(g, s)
        assert [INF if d is None else d for d in got] == fw[s]


@given(graphs(max_n=10))
def test_distance_axioms(g):
    d = [bfs_distances(g, s) for s in range(g.n)]
    for u in range(g.n):
        assert d[u][u] == 0
        for v in range(g.n):
            assert d[u][v] == d[v][u]
            for w in range(g.n):
                if None not in (d[u][v], d[v][w], d[u][w]):
                    assert d[u][w] <= d[u][v] + d[v][w]


@given(graphs(max_n=10))
def test_degrees_are_popcounts(g):
    assert g.degrees() == [bin(r).count("1") for r in g.adj]
    assert sum(g.degrees()) == 2 * g.num_edges


@given(graphs(max_n=10))
def test_full_induced_subgraph_keeps_degrees(g):
    sub, _ = induced_subgraph(g, range(g.n))
    assert sub.degrees() == g.degrees()


@given(graphs(max_n=10))
def test_components_partition_vertices(g):
    comps = components(g)
    assert sorted(v for c in comps for v in c) == list(range(g.n))
    assert (len(comps) == 1) == is_connected(g)
