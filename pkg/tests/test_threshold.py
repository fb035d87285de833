from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromwin import algorithms as alg
from chromwin.graph import (
    GraphError,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    empty_graph,
    graph_from_edges,
    grotzsch_graph,
    join,
    path_graph,
    petersen_graph,
)
from chromwin.threshold import (
    chromatic_threshold,
    decomposition_family,
    describe,
    is_near_acyclic,
    is_r_near_acyclic,
    threshold_values,
    verify_classification,
)

from conftest import graphs

W5 = join(cycle_graph(5), empty_graph(1))


def test_describe():
    assert describe(complete_graph(2)) == "K2"
    assert describe(cycle_graph(5)) == "C5"
    assert describe(path_graph(4)) == "P4"
    assert describe(graph_from_edges(3, [(1, 2)])) == "K2 + K1"


def test_family_examples():
    assert [describe(m.graph) for m in decomposition_family(complete_graph(3))] == ["K2"]
    assert [describe(m.graph) for m in decomposition_family(complete_graph(4))] == ["K2"]
    names = {describe(m.graph) for m in decomposition_family(cycle_graph(5))}
    assert names == {"P4", "K2 + K1"}
    for g in (cycle_graph(5), complete_graph(4), W5, petersen_graph()):
        for m in decomposition_family(g):
            assert alg.is_bipartite(m.graph)


def test_family_errors():
    with pytest.raises(GraphError):
        decomposition_family(cycle_graph(4))
    with pytest.raises(alg.InstanceTooLarge):
        decomposition_family(grotzsch_graph())


def test_near_acyclic_examples():
    assert is_near_acyclic(cycle_graph(5))[0]
    assert not is_near_acyclic(complete_graph(3))[0]
    ok, w = is_near_acyclic(cycle_graph(7))
    assert ok and len(w.independent) >= 2
    with pytest.raises(GraphError):
        is_near_acyclic(complete_graph(4))


def test_r_near_acyclic_examples():
    assert is_r_near_acyclic(cycle_graph(5), 3)[0]
    assert not is_r_near_acyclic(complete_graph(4), 4)[0]
    ok, w = is_r_near_acyclic(W5, 4)
    assert ok and w.deletions == (frozenset({5}),)


@pytest.mark.parametrize("g,value", [
    (cycle_graph(5), Fraction(0)),
    (complete_graph(3), Fraction(1, 3)),
    (complete_graph(4), Fraction(3, 5)),
    (W5, Fraction(1, 2)),
    (complete_multipartite([2, 2, 2]), Fraction(1, 2)),  # no forest in the family: (r-2)/(r-1)
    (grotzsch_graph(), Fraction(1, 2)),
])
def test_classification(g, value):
    tc = chromatic_threshold(g)
    assert tc.value == value
    assert verify_classification(g, tc)


def test_summary_text():
    assert chromatic_threshold(complete_graph(4)).summary() == (
        "chi=4, delta_chi=3/5, witness=forest K2 in decomposition family; not 4-near-acyclic")
    assert "no forest" in chromatic_threshold(complete_multipartite([2, 2, 2])).summary()


@settings(max_examples=60)
@given(graphs(min_n=3, max_n=7), st.integers(0, 10**6))
def test_classifier_invariants(g, seed):
    r = alg.chromatic_number(g)
    if r < 3:
        return
    tc = chromatic_threshold(g)
    assert tc.value in threshold_values(r)
    assert verify_classification(g, tc)
    # the verdict does not depend on the order the independent sets are tried in
    assert is_r_near_acyclic(g, r, order_seed=seed)[0] == (tc.kind == "near-acyclic")
