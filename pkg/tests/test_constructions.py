import json
import math
from fractions import Fraction as F

import pytest

from chromwin import algorithms as alg
from chromwin.bounds import f2
from chromwin.constructions import (
    ConstructionError,
    borsuk_circle_core,
    build_bh_star,
    build_bh_star_star,
    build_eg,
    density_report,
    part_sizes_bh_star,
    part_sizes_bh_star_star,
    part_sizes_eg,
    small_three_chromatic_near_acyclic,
)
from chromwin.graph import bits, complete_graph, cycle_graph, empty_graph, edges_within, turan_graph


def test_part_sizes():
    s = part_sizes_bh_star(4, F(3, 5), 100)
    assert (s.X, s.Y, s.Z) == (100, (100,), 50)
    s = part_sizes_bh_star_star(4, F(11, 20), 100)
    assert (s.X, s.Y, s.Z) == (100, (115,), 85)
    s = part_sizes_eg(5, F(3, 5), 1000)
    assert (s.X, s.Y, s.Z) == (200, (300, 300), 200)
    s = part_sizes_eg(4, F(1, 3), 999)
    assert (s.X, s.Y, s.Z) == (333, (333,), 333)


def test_part_size_identities():
    # BH** normalised parts satisfy x/2 + y = delta before rounding
    for r, d in [(4, F(11, 20)), (5, F(2, 3)), (6, F(3, 4))]:
        s = part_sizes_bh_star_star(r, d, 1000)
        tot = s.targets["X"] + (r - 3) * s.targets["Y_i"] + s.targets["Z"]
        x, y = s.targets["X"] / tot, (r - 3) * s.targets["Y_i"] / tot
        assert x / 2 + y == d
    # BH* total Y is (r-3)(1-delta) n before rounding
    for r, d in [(4, F(3, 5)), (5, F(19, 27))]:
        s = part_sizes_bh_star(r, d, 1000)
        tot = s.targets["X"] + (r - 3) * s.targets["Y_i"] + s.targets["Z"]
        assert (r - 3) * s.targets["Y_i"] == (r - 3) * (1 - d) * tot


def test_part_size_errors():
    with pytest.raises(ConstructionError):
        part_sizes_bh_star(4, F(1, 3), 10)
    with pytest.raises(ConstructionError):
        part_sizes_eg(4, F(3, 5), 100)
    with pytest.raises(ConstructionError):
        part_sizes_eg(3, F(0), 100)


def test_circle_core():
    core = borsuk_circle_core(60, 0.3, 120)
    g = core.graph
    X = core.roles.mask("X")
    assert not alg.has_clique(g, 3)
    assert edges_within(g, X) == 0
    ring = core.roles.mask("U'")
    for u in bits(ring):
        assert (g.adj[u] & X).bit_count() >= (0.5 - 0.3) * 120
        for v in bits(g.adj[u] & ring):
            assert not g.adj[u] & g.adj[v] & X  # adjacent ring points share no X neighbour
    with pytest.raises(ConstructionError):
        borsuk_circle_core(10, 1.2, 20)


def test_bh_star_small():
    c = build_bh_star(4, F(3, 5), 250)
    g, roles = c.graph, c.roles
    assert c.report.n == 250 == g.n
    assert edges_within(g, roles.mask("X")) == 0 and edges_within(g, roles.mask("Z")) == 0
    # no ring-to-Z edges
    assert all(not g.adj[u] & roles.mask("Z") for u in roles["U'"])
    assert c.report.clique_number <= 3


def test_eg_structure_and_errors():
    c = build_eg(5, F(3, 5), 600, core="c5")
    g, roles = c.graph, c.roles
    Y1, Y2 = roles.mask("Y1"), roles.mask("Y2")
    assert edges_within(g, Y1) == 0
    assert all(g.adj[v] & Y2 == Y2 for v in bits(Y1))
    assert all(not g.adj[v] & (roles.mask("X") | roles.mask("Z")) for v in roles["E"])
    assert c.report.clique_number <= 4
    with pytest.raises(ConstructionError):
        build_eg(5, F(3, 5), 1000, core=complete_graph(3))
    with pytest.raises(ConstructionError):
        build_eg(5, F(3, 5), 100, core="petersen")


def test_regime_warning():
    with pytest.warns(UserWarning):
        build_bh_star(4, F(11, 20), 200, clique=False)


def test_density_report_examples():
    rep = density_report(turan_graph(3, 300), 4, F(1, 3), f2(4, F(1, 3)).value)
    assert rep.deviation <= 0.002
    rep = density_report(empty_graph(10), 4, F(1, 2), F(5, 16))
    assert math.isclose(rep.deviation, 5 / 16)
    rep = density_report(cycle_graph(6), 3, F(0), F(1, 4), h=cycle_graph(5))
    assert rep.h_free is True
    fields = json.loads(rep.to_json())
    for key in ("kind", "r", "delta", "n", "parts", "edges", "min_degree", "density", "target",
                "deviation", "clique_number", "core"):
        assert key in fields


def test_small_subgraph_verdict_cached(tmp_path, monkeypatch):
    monkeypatch.setenv("CHROMWIN_CACHE_DIR", str(tmp_path))
    out = small_three_chromatic_near_acyclic(5)
    assert out["all_near_acyclic"] and out["checked"] == 12  # labelled 5-cycles
    assert (tmp_path / "tf3_near_acyclic_5.json").exists()


@pytest.mark.parametrize("kind,build,r,d", [
    ("bh-star", build_bh_star, 4, F(3, 5)),
    ("bh-star-star", build_bh_star_star, 4, F(11, 20)),
])
def test_density_converges(kind, build, r, d):
    # fixed-size core, so its share of n shrinks with n
    devs = [build(r, d, n, ring=4, clique=False).report.deviation for n in (250, 500, 1000)]
    assert devs[0] > devs[1] > devs[2]
    assert devs[1] <= 0.01 and devs[2] <= 0.01


from hypothesis import given, strategies as st


@given(st.integers(4, 9), st.integers(0, 1000), st.integers(50, 3000), st.integers(0, 20))
def test_eg_sizes_sum_to_request(r, t, scale, core):
    lo, hi = F(r - 3, r - 1), F(r - 3, r - 2)
    d = lo + (hi - lo) * F(t, 1000)
    s = part_sizes_eg(r, d, scale, core)
    assert s.total == scale - core
    assert len(set(s.Y)) == 1 and abs(s.X - s.Z) <= 1
