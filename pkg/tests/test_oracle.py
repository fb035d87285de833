import itertools
import json

import networkx as nx
import pytest

from chromwin import oracle
from chromwin.graph import graph_from_code, pair_list, turan_edge_count
from chromwin.graph6 import encode_graph6, read_graph6_stream

from conftest import to_nx


def _omega(g, vs=None):
    h = to_nx(g) if vs is None else to_nx(g).subgraph(vs)
    if h.number_of_nodes() == 0:
        return 0
    return max(len(c) for c in nx.find_cliques(h))


def _brute_lemma_basic(n, r, t):
    viol = 0
    eq = {}
    for code in range(1 << len(pair_list(n))):
        g = graph_from_code(n, code)
        if _omega(g) >= r:
            continue
        for a in range(n + 1):
            if a * (r - 1) < (t - 1) * n:
                continue
            bound = turan_edge_count(t - 1, a) + turan_edge_count(r - t, n - a) + a * (n - a)
            for A in itertools.combinations(range(n), a):
                if _omega(g, A) >= t:
                    continue
                if g.edge_count > bound:
                    viol += 1
                elif g.edge_count == bound:
                    eq[f"n={n},a={a}"] = eq.get(f"n={n},a={a}", 0) + 1
    return viol, eq


def test_corpus_counts():
    rep = oracle.verify_lemma_basic(5, 4, 3)
    assert rep.corpus == {n: 2 ** (n * (n - 1) // 2) for n in range(1, 6)}


def test_lemma_basic_matches_brute_force():
    rep = oracle.verify_lemma_basic(4, 3, 2)
    viol, eq = _brute_lemma_basic(4, 3, 2)
    assert rep.violation_count == viol == 0
    got = {k: v for k, v in rep.extra["equality_counts"].items() if k.startswith("n=4")}
    assert got == eq


def test_c4_equality_witness():
    rep = oracle.verify_lemma_basic(4, 3, 2)
    hits = [w for w in rep.witnesses if w["n"] == 4 and w["a"] == 2 and w["code"] == 30]
    assert hits and hits[0]["A"] == [0, 1]
    assert nx.is_isomorphic(to_nx(graph_from_code(4, 30)), nx.cycle_graph(4))


def test_witnesses_replay():
    rep = oracle.verify_lemma_basic(5, 4, 3)
    assert rep.witnesses
    assert all(oracle.replay_lemma_basic(w, 4, 3) == "equality" for w in rep.witnesses)
    rep = oracle.verify_lemma_xyz(5, 4)
    assert rep.passed and rep.witnesses
    assert all(oracle.replay_lemma_xyz(w, 4) == "equality" for w in rep.witnesses)
    rep = oracle.verify_aes(6, 3)
    assert rep.passed
    assert all(oracle.replay_aes(w, 3) == "boundary" for w in rep.witnesses)


def test_shard_invariance():
    a = oracle.verify_lemma_xyz(5, 5, workers=1).to_dict()
    b = oracle.verify_lemma_xyz(5, 5, workers=3).to_dict()
    a.pop("wall_time"), b.pop("wall_time")
    assert a == b


def test_aes_graph6_corpus_agrees():
    rep = oracle.verify_aes(5, 3, n_min=5)
    stream = [encode_graph6(graph_from_code(5, c)) for c in range(1 << 10)]
    rep2 = oracle.verify_aes(5, 3, corpus=read_graph6_stream(stream))
    assert rep2.corpus == {5: 1024}
    assert rep2.checked == rep.checked and rep2.extra["boundary_count"] == rep.extra["boundary_count"]


def test_hall_small():
    rep = oracle.verify_hall(3, 3, workers=2)
    assert rep.passed
    assert rep.corpus["3x3"] == 512


def test_hall_bipartite_layout():
    g = oracle.hall_bipartite(2, 3, 0b101_011)
    assert sorted(g.edges()) == [(0, 2), (0, 3), (1, 2), (1, 4)]


def test_symmetrization_current_mode_clean():
    rep = oracle.verify_symmetrization(300, seed=1, n_max=7, modes=("current",))
    assert rep.passed, rep.violations[:2]


def test_frozen_mode_counterexample_replays():
    rep = oracle.verify_symmetrization(400, seed=0, n_max=9, modes=("frozen",))
    assert not rep.passed
    for w in rep.violations:
        assert oracle.replay_symmetrization(w) == w["properties"]
    assert set(rep.extra["by_mode"]["frozen"]["property_counts"]) == {"edges-monotone"}


def test_symmetrization_instance_deterministic():
    a = oracle.symmetrization_instance(3, 17)
    b = oracle.symmetrization_instance(3, 17)
    assert a == b


def test_claim_sweep_small():
    rep = oracle.verify_claim_sweep([4, 5], samples=3, grid_step=1e-2)
    assert rep.passed
    assert rep.extra["max_excess"] <= 1e-9


def test_report_roundtrip():
    rep = oracle.verify_lemma_xyz(4, 4)
    back = oracle.OracleReport.from_dict(json.loads(rep.to_json()))
    assert back.to_dict() == rep.to_dict()
    assert "PASS" in rep.summary()


def test_bad_parameters():
    with pytest.raises(ValueError):
        oracle.verify_lemma_basic(4, 3, 3)
    with pytest.raises(ValueError):
        oracle.verify_symmetrization(1, modes=("lazy",))
