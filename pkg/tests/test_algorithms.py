import math

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from chromwin import algorithms as alg
from chromwin.graph import (
    complete_graph,
    complete_multipartite,
    cycle_graph,
    empty_graph,
    graph_from_edges,
    grotzsch_graph,
    path_graph,
    petersen_graph,
)

from conftest import graphs, to_nx


def _brute_chi(g):
    import itertools

    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        for col in itertools.product(range(k), repeat=g.n):
            if all(col[u] != col[v] for u, v in g.edges()):
                return k


@given(graphs(max_n=10))
def test_clique_number_vs_networkx(g):
    ref = max((len(c) for c in nx.find_cliques(to_nx(g))), default=0)
    assert alg.clique_number(g) == ref
    assert len(alg.max_clique(g)) == ref


@given(graphs(max_n=7))
def test_chromatic_number_vs_brute_force(g):
    assert alg.chromatic_number(g) == _brute_chi(g)


@given(graphs(max_n=10))
def test_structure_vs_networkx(g):
    h = to_nx(g)
    assert alg.is_bipartite(g) == nx.is_bipartite(h)
    assert alg.is_forest(g) == (nx.is_forest(h) if g.n else True)
    assert len(alg.components(g)) == nx.number_connected_components(h)
    gi = nx.girth(h)
    assert alg.girth(g) == gi


@given(graphs(max_n=7))
def test_simple_cycles_vs_networkx(g):
    ours = alg.simple_cycles(g)
    ref = [c for c in nx.simple_cycles(to_nx(g)) if len(c) >= 3]
    assert len(ours) == len(ref)
    assert len(set(ours)) == len(ours)


def test_known_values():
    assert alg.girth(petersen_graph()) == 5
    assert alg.girth(path_graph(4)) == math.inf
    assert alg.chromatic_number(grotzsch_graph()) == 4
    assert alg.clique_number(grotzsch_graph()) == 2
    assert alg.odd_cycles(complete_graph(4)) == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    assert alg.kp_independence(cycle_graph(5), 2) == 2
    assert alg.kp_independence(complete_graph(5), 3) == 2


def test_large_clique_search():
    g = complete_multipartite([120, 120, 80, 80])
    assert not alg.has_clique(g, 5)
    assert alg.has_clique(g, 4)
    assert len(alg.max_clique(g)) == 4


def test_chromatic_cap():
    with pytest.raises(alg.InstanceTooLarge):
        alg.chromatic_number(empty_graph(20))


@given(st.integers(1, 5), st.integers(1, 5), st.data())
def test_matching_vs_networkx(a, b, data):
    edges = [(i, a + j) for i in range(a) for j in range(b) if data.draw(st.booleans())]
    g = graph_from_edges(a + b, edges)
    h = to_nx(g)
    ref = len(nx.bipartite.maximum_matching(h, top_nodes=range(a))) // 2
    assert alg.matching_number(g, range(a), range(a, a + b)) == ref
    assert a - alg.hall_deficiency(g, range(a), range(a, a + b)) == ref


def test_matching_rejects_non_bipartite_edges():
    g = graph_from_edges(3, [(0, 1), (1, 2)])
    with pytest.raises(Exception):
        alg.matching_number(g, [0, 1], [2])


@given(graphs(max_n=6), graphs(max_n=8))
def test_subgraph_vs_networkx(h, g):
    matcher = nx.algorithms.isomorphism.GraphMatcher(to_nx(g), to_nx(h))
    ref = matcher.subgraph_is_monomorphic()
    assert alg.contains_subgraph(h, g) == ref


def test_isomorphism():
    assert alg.is_isomorphic(cycle_graph(4), complete_multipartite([2, 2]))
    assert not alg.is_isomorphic(cycle_graph(6), graph_from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]))


def test_enumeration_counts():
    assert sum(1 for _ in alg.enumerate_labeled_graphs(4)) == 64
