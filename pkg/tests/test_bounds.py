from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from chromwin.bounds import (
    f1,
    f1_branch,
    f1_window,
    f2,
    g_claim,
    lagrangian_stationary,
    parse_rational,
    reduced_edge_bound,
    sweep,
    sweep_csv,
    tradeoff_params,
    turan_density,
    verify_claim,
)


def test_f1_values():
    assert str(f1(4, F(3, 5))) == "8/25 (0.32), regime=upper"
    assert f1(4, F(7, 12)).value == F(47, 144) and f1(4, F(7, 12)).regime == "lower"
    assert f1_branch(4, F(7, 12), "upper") == F(47, 144)
    assert f1(4, F(1, 2)).value == F(1, 3)
    assert f1(4, F(11, 20)).value == F(1191, 3600)


def test_f1_regimes():
    lo, mid, hi = f1_window(4)
    assert (lo, mid, hi) == (F(1, 2), F(7, 12), F(3, 5))
    assert f1(4, mid).regime == "lower"
    assert f1(4, F(2, 5)).regime == "out-of-range-low"
    assert f1(4, F(2, 3)).regime == "out-of-range-high"
    assert f1(4, F(2, 3)).value == f1_branch(4, F(2, 3), "upper")


def test_f1_r3_branches_agree():
    for d in (F(1, 4), F(2, 7), F(1, 3)):
        assert f1_branch(3, d, "upper") == f1_branch(3, d, "lower") == -4 * d * d + 2 * d


def test_f2_values():
    assert f2(5, F(3, 5)).value == F(37, 100)
    assert f2(4, F(1, 2)).value == F(5, 16)
    assert f2(4, F(1, 3)).value == F(1, 3)
    assert f2(4, F(1, 3)).regime == "in-range"
    with pytest.raises(ValueError):
        f2(3, F(1, 2))


def test_rejects_floats():
    with pytest.raises(TypeError):
        f1(4, 0.6)
    assert f1(4, "0.6").value == F(8, 25)


@pytest.mark.parametrize("text,value", [("3/5", F(3, 5)), ("0.6", F(3, 5)), ("-1/2", F(-1, 2)), ("2", F(2))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["0.333...", "nan", "inf", "1/0x", "", "1e", "abc"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_tradeoff_r4():
    up = tradeoff_params(4, "upper")
    assert (up.A, up.B, up.C) == (F(13), F(15, 26), F(17, 52))
    lo = tradeoff_params(4, "lower")
    assert (lo.A, lo.B, lo.C) == (F(1), F(1, 2), F(1, 3))


@given(st.integers(3, 12), st.fractions(0, 1))
def test_tradeoff_identity(r, d):
    for regime in ("upper", "lower"):
        assert tradeoff_params(r, regime).threshold(d) == f1_branch(r, d, regime)


def test_turan_density():
    assert turan_density(4) == F(1, 3)
    for r in range(3, 13):
        lo, _, _ = f1_window(r)
        assert f1(r, lo).value == turan_density(r)


def test_reduced_edge_bound():
    assert reduced_edge_bound(10, 100, 10, F(0), F(1, 20)) == 10 * 100 + F(1, 10) * 10000
    with pytest.raises(ValueError):
        reduced_edge_bound(1, 10, 5, F(1, 2), F(1, 100))
    with pytest.raises(ValueError):
        reduced_edge_bound(1, 10, 100, F(1), F(1, 10))


def test_g_claim_and_stationary_point():
    x, y = lagrangian_stationary(4, F(11, 20))
    assert (x, y) == (F(1, 3), F(23, 60))
    assert g_claim(x, y, 4) == F(1191, 3600)
    assert g_claim(F(2, 5), F(2, 5), 4) == F(8, 25)
    arr = g_claim(np.array([0.4]), np.array([0.4]), 4)
    assert abs(arr[0] - 0.32) < 1e-12
    assert g_claim(F(1, 2), F(1, 4), 3) == F(1, 2) * F(1, 2) + F(1, 4) * F(1, 4)
    with pytest.raises(ValueError):
        lagrangian_stationary(3, F(1, 4))


@given(st.integers(4, 9), st.fractions(0, 1))
def test_stationary_point_on_line(r, t):
    lo, mid, _ = f1_window(r)
    d = lo + (mid - lo) * t
    x, y = lagrangian_stationary(r, d)
    assert x / 2 + y == d
    assert g_claim(x, y, r) == f1(r, d).value


def test_verify_claim_coarse():
    rep = verify_claim(5, F(7, 10), grid_step=1e-2)
    assert rep.passed and rep.max_excess <= 1e-9
    with pytest.raises(ValueError):
        verify_claim(4, F(9, 10))


def test_sweep_csv():
    rows = sweep(1, 4, F(1, 2), F(3, 5), F(1, 240))
    assert len(rows) == 25
    text = sweep_csv(rows)
    lines = text.splitlines()
    assert lines[0] == "delta,value,regime"
    assert lines[1] == "0.5,0.333333333333,lower"
    assert lines[-1] == "0.6,0.32,upper"
    with pytest.raises(ValueError):
        sweep(1, 4, F(3, 5), F(1, 2), F(1, 10))
    with pytest.raises(ValueError):
        sweep(1, 4, F(1, 2), F(3, 5), F(0))
