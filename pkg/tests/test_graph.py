import pytest
from hypothesis import given

from chromwin.graph import (
    Graph,
    GraphError,
    RolePartition,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    delete_vertices,
    disjoint_union,
    empty_graph,
    graph_code,
    graph_from_code,
    graph_from_edges,
    grotzsch_graph,
    induced,
    join,
    pair_list,
    parse_edge_list,
    petersen_graph,
    star_graph,
    turan_edge_count,
    turan_graph,
)

from conftest import graphs


def test_rejects_self_loop_and_bad_endpoint():
    with pytest.raises(GraphError):
        graph_from_edges(3, [(1, 1)])
    with pytest.raises(GraphError):
        graph_from_edges(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))  # asymmetric


def test_edge_list_round_trip():
    g = cycle_graph(5)
    text = g.to_edge_list_text()
    assert text.splitlines()[0] == "5 5"
    assert parse_edge_list(text) == g


def test_edge_list_header_mismatch():
    with pytest.raises(GraphError):
        parse_edge_list("3 2\n0 1\n")
    with pytest.raises(GraphError):
        parse_edge_list("0 1\n")


def test_turan_counts():
    assert turan_edge_count(2, 4) == 4
    assert turan_edge_count(3, 7) == 16
    assert turan_graph(3, 7).edge_count == 16
    assert complete_multipartite([1, 1, 1, 1]) == complete_graph(4)


def test_join_and_union():
    w = join(cycle_graph(5), empty_graph(1))
    assert w.n == 6 and w.edge_count == 10 and w.degree(5) == 5
    u = disjoint_union(complete_graph(3), complete_graph(2))
    assert u.edge_count == 4 and not u.has_edge(0, 3)


def test_named_graphs():
    p = petersen_graph()
    assert (p.n, p.edge_count, set(p.degrees())) == (10, 15, {3})
    gz = grotzsch_graph()
    assert (gz.n, gz.edge_count) == (11, 20)
    assert star_graph(3).degrees() == [3, 1, 1, 1]


def test_induced_relabels_in_order():
    g = cycle_graph(5)
    h = induced(g, [4, 0, 1])
    assert h.edges() == [(0, 1), (0, 2)]  # vertices 0, 1, 4
    assert delete_vertices(g, [0]).edge_count == 3


def test_pair_order_is_graph6_order():
    assert pair_list(4) == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]


@given(graphs())
def test_code_round_trip(g):
    assert graph_from_code(g.n, graph_code(g)) == g


@given(graphs())
def test_complement_involution(g):
    c = g.complement()
    assert c.complement() == g
    assert c.edge_count + g.edge_count == g.n * (g.n - 1) // 2


def test_role_partition():
    rp = RolePartition({"X": frozenset({0, 1}), "Y": frozenset({2})})
    assert rp.sizes() == {"X": 2, "Y": 1} and rp.mask("X") == 3
    with pytest.raises(GraphError):
        RolePartition({"X": frozenset({0}), "Y": frozenset({0})})
    with pytest.raises(GraphError):
        rp.validate(2)
