from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import assume, given

from bugraph.betweenness import GeodesicTable, is_betweenness_uniform
from bugraph.connectivity import all_two_cuts, analyze_two_cut, minimal_two_cut, vertex_connectivity
from bugraph.constructions import cycle, path
from bugraph.discrepancy import (alpha_profile, disc, disc_breakdown, disc_over_pairs, disc_pq_pair, disc_report,
                                 pair_classes, proposition1_contribution, proposition1_formula,
                                 proposition1_general)
from bugraph.errors import GraphError, InvalidCut
from bugraph.graph import from_edge_list, is_cycle_graph
from bugraph.graph6 import decode_graph6

from conftest import connected_graphs
from oracles import brute_betweenness, brute_components, brute_pair_betweenness

DIAMOND = from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
# two pq-geodesics: p-v-q and p-3-q; w hangs off p and 3
TWO_GEODESICS = from_edge_list(6, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 5), (5, 3)])


def oracle_disc(g, p, q, K):
    vb, _ = brute_betweenness(g.n, g.edges())
    return (vb[p] + vb[q]) / 2 - sum(vb[v] for v in K) / len(K)


def oracle_disc_pairs(g, pairs, p, q, K):
    e = g.edges()
    cut = sum(brute_pair_betweenness(g.n, e, pairs, u) for u in (p, q)) / 2
    return cut - sum(brute_pair_betweenness(g.n, e, pairs, u) for u in K) / len(K)


def case_a_instances(g):
    for v in range(g.n):
        if g.degree(v) == 2:
            p, q = g.neighbors(v)
            if not g.has_edge(p, q):
                yield p, q, v


def test_uniform_graphs_have_zero_disc_for_every_cut():
    for n in range(4, 11):
        g = cycle(n)
        for p, q in all_two_cuts(g):
            for K in brute_components(n, g.edges(), {p, q}):
                assert disc(g, p, q, K) == 0
                assert disc_breakdown(g, analyze_two_cut(g, p, q, K)).consistent


def test_c6_minimal_cut():
    g = cycle(6)
    b = disc_breakdown(g, minimal_two_cut(g))
    assert b.total == 0 and b.parts_sum == 0
    a = minimal_two_cut(g)
    kk, ll, cross = pair_classes(a)
    assert b.part_kplus == oracle_disc_pairs(g, kk, a.p, a.q, a.K)
    assert b.part_l == oracle_disc_pairs(g, ll, a.p, a.q, a.K)
    assert b.part_cross == oracle_disc_pairs(g, cross, a.p, a.q, a.K)


def test_diamond_hub_pair():
    a = analyze_two_cut(DIAMOND, 0, 1)
    assert a.K == frozenset({2})
    value = disc(DIAMOND, 0, 1, a.K)
    assert value == oracle_disc(DIAMOND, 0, 1, a.K) == Fraction(1, 2)
    assert disc_breakdown(DIAMOND, a).parts_sum == value


def test_disc_rejects_non_cut():
    with pytest.raises(InvalidCut):
        disc(DIAMOND, 0, 2, {1})


def test_pair_classes_partition():
    g = from_edge_list(8, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 7), (7, 2)])
    for p, q in all_two_cuts(g):
        a = analyze_two_cut(g, p, q)
        kk, ll, cross = pair_classes(a)
        every = kk + ll + cross
        assert len(every) == len(set(every)) == 28


def test_alpha_examples():
    g = DIAMOND
    assert alpha_profile(g, 0, 1)[2] == 0
    # interior of a path between p and q: alpha = 2w - (n - 1)
    g = path(9)
    alpha = alpha_profile(g, 0, 8)
    assert [alpha[w] for w in range(1, 8)] == list(range(-6, 7, 2))
    c8 = alpha_profile(cycle(8), 0, 4)
    assert sorted(set(c8.values())) == [-2, 0, 2]
    assert c8 == {1: -2, 2: 0, 3: 2, 5: 2, 6: 0, 7: -2}


def test_alpha_on_odd_induced_path():
    # induced pq-path p=0, interior 1..5 (odd count), q=6; the interior sees -5,-3,...,5
    g = path(7)
    alpha = alpha_profile(g, 0, 6)
    assert [alpha[w] for w in range(1, 6)] == [-4, -2, 0, 2, 4]
    g = path(8)
    alpha = alpha_profile(g, 0, 7)
    lam = 2
    assert [alpha[w] for w in range(1, 7)] == list(range(-2 * lam - 1, 2 * lam + 2, 2))


def test_disc_pq_pair_examples():
    assert disc_pq_pair(cycle(4), 0, 2, 1) == Fraction(-1, 2)
    assert disc_pq_pair(cycle(6), 0, 2, 1) == -1
    g = from_edge_list(4, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 0)])
    with pytest.raises(InvalidCut):
        disc_pq_pair(g, 0, 2, 1)


def test_prop1_requires_case_a():
    with pytest.raises(InvalidCut):
        proposition1_contribution(DIAMOND, 0, 1, 2, 3)
    with pytest.raises(GraphError):
        proposition1_contribution(cycle(6), 0, 2, 1, 0)


def test_prop1_formula_defect_when_pq_has_two_geodesics():
    g = TWO_GEODESICS
    table = GeodesicTable(g)
    p, q, v, w = 0, 1, 2, 4
    assert table.sigma[p][q] == 2
    alpha = table.dist[w][p] - table.dist[w][q]
    assert alpha == -2
    measured = proposition1_contribution(g, p, q, v, w, table)
    assert measured == Fraction(1, 2)
    assert proposition1_formula(g, p, q, w, table) == Fraction(1, 3)
    assert proposition1_general(g, p, q, w, table) == measured


def test_prop1_alpha_two_value_on_cycles():
    # on odd cycles the far geodesic is unique, so the |alpha| = 2 value is exactly 0
    g = cycle(7)
    table = GeodesicTable(g)
    alpha = alpha_profile(g, 0, 2, (1,))
    assert sorted(alpha.values()) == [-2, -1, 1, 2]
    for w, al in alpha.items():
        val = proposition1_contribution(g, 0, 2, 1, w, table)
        if abs(al) == 2:
            assert val == 0 == proposition1_formula(g, 0, 2, w, table)
    # on even cycles it sits inside the interval
    g = cycle(6)
    table = GeodesicTable(g)
    assert proposition1_contribution(g, 0, 2, 1, 3, table) == Fraction(1, 4)


def test_prop1_branches_upto_7(connected_upto):
    instances = unique = 0
    for g in connected_upto(7):
        if g.n < 4 or vertex_connectivity(g) != 2:
            continue
        table = None
        for p, q, v in case_a_instances(g):
            table = table or GeodesicTable(g)
            instances += 1
            for w in alpha_profile(g, p, q, (v,)):
                measured = proposition1_contribution(g, p, q, v, w, table)
                alpha = table.dist[w][p] - table.dist[w][q]
                assert abs(alpha) <= 2  # d(p, q) = 2
                if abs(alpha) <= 1:
                    assert measured == Fraction(1, 2)
                assert measured == proposition1_general(g, p, q, w, table)
                assert 0 <= measured <= Fraction(1, 2) or table.sigma[p][q] > 1
                if table.sigma[p][q] == 1:
                    unique += 1
                    assert measured == proposition1_formula(g, p, q, w, table)
            assert disc_pq_pair(g, p, q, v, table) == -Fraction(1, table.sigma[p][q])
    assert instances > 300 and unique > 300


@given(connected_graphs(min_n=4, max_n=8))
def test_breakdown_exact_and_matches_oracle(g):
    assume(vertex_connectivity(g) == 2)
    cuts = all_two_cuts(g)
    for p, q in cuts[:3]:
        a = analyze_two_cut(g, p, q)
        rep = disc_report(g, a)
        assert rep.whole.consistent
        assert rep.whole.total == oracle_disc(g, a.p, a.q, a.K)
        for sub, sa, b in rep.per_component:
            assert b.consistent


@given(connected_graphs(max_n=10))
def test_alpha_neighbour_step(g):
    if g.n < 3:
        return
    alpha = alpha_profile(g, 0, 1)
    for u, v in g.edges():
        if u in alpha and v in alpha:
            assert abs(alpha[u] - alpha[v]) <= 2


def test_part_l_nonnegative_on_minimal_cuts_upto_7(connected_upto):
    for g in connected_upto(7):
        if g.n < 4 or g.is_complete() or vertex_connectivity(g) != 2:
            continue
        a = minimal_two_cut(g)
        for sub, sa, b in disc_report(g, a).per_component:
            assert b.part_l >= 0


def test_disc_over_pairs_matches_oracle():
    g = TWO_GEODESICS
    a = analyze_two_cut(g, 0, 1)
    pairs = list(combinations(range(g.n), 2))
    assert disc_over_pairs(g, pairs, a.p, a.q, a.K) == oracle_disc(g, a.p, a.q, a.K)


def test_zero_disc_on_a_non_cycle_minimal_cut():
    # disc on the chosen minimal cut can vanish for a non-uniform non-cycle; another minimal cut is positive
    g = decode_graph6("G?LTUG")
    assert not is_cycle_graph(g) and not is_betweenness_uniform(g)[0]
    a = minimal_two_cut(g)
    assert (a.p, a.q, a.K, a.k) == (4, 5, frozenset({3}), 1)
    assert disc(g, 4, 5, {3}) == 0 == oracle_disc(g, 4, 5, {3})
    assert disc(g, 4, 6, {2}) == Fraction(9, 2)
