"""Exact edge-density bound functions f1, f2 and the quadratic program behind f1.

All bound values are :class:`fractions.Fraction`; floats only appear in grid scans
and in rendered decimals.
"""

from __future__ import annotations

import csv
import io
import numbers
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

Rational = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?(\d+(/\d+)?|\d*\.\d+([eE][+-]?\d+)?|\d+[eE][+-]?\d+)$")


def parse_rational(text: str) -> Fraction:
    """Parse "p/q", an integer or a terminating decimal ("0.6") exactly.

    Anything else (repeating notation such as "0.333...", nan, inf) is rejected.
    """
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not an exact rational: {text!r}")
    value = Fraction(s)
    return value


def as_fraction(x) -> Fraction:
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, numbers.Rational):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def fmt(x: Fraction, digits: int = 12) -> str:
    return f"{float(x):.{digits}g}"


# ------------------------------------------------------------------ regimes


def f1_window(r: int) -> tuple[Fraction, Fraction, Fraction]:
    """(lower end, breakpoint, upper end) of the f1 window for clique parameter r."""
    return Fraction(2 * r - 5, 2 * r - 2), Fraction(5 * r - 13, 5 * r - 8), Fraction(2 * r - 5, 2 * r - 3)


def f2_window(r: int) -> tuple[Fraction, Fraction]:
    return Fraction(r - 3, r - 1), Fraction(r - 3, r - 2)


@dataclass(frozen=True)
class BoundEvaluation:
    theorem: int
    r: int
    delta: Fraction
    value: Fraction
    regime: str

    @property
    def in_range(self) -> bool:
        return not self.regime.startswith("out-of-range")

    def __str__(self) -> str:
        return f"{self.value} ({fmt(self.value)}), regime={self.regime}"


def _f1_upper(r: int, d: Fraction) -> Fraction:
    return ((-5 * r * r + 17 * r - 14) * d * d + (10 * r * r - 44 * r + 46) * d - 5 * r * r + 27 * r - 36) / 2


def _f1_lower(r: int, d: Fraction) -> Fraction:
    return (-4 * (r - 1) * d * d + 4 * (2 * r - 5) * d + r - 3) / Fraction(10 * r - 28)


def f1_branch(r: int, delta, branch: str) -> Fraction:
    """Evaluate one quadratic branch of f1 regardless of where delta lies."""
    d = as_fraction(delta)
    if branch == "upper":
        return _f1_upper(r, d)
    if branch == "lower":
        return _f1_lower(r, d)
    raise ValueError(f"unknown branch {branch!r}")


def f1(r: int, delta) -> BoundEvaluation:
    """Edge-density bound when the chromatic threshold is (2r-5)/(2r-3).

    The breakpoint (5r-13)/(5r-8) belongs to the lower branch. Outside the window the
    nearest branch is evaluated and the regime is flagged out of range.
    """
    if not isinstance(r, int) or r < 3:
        raise ValueError("f1 needs an integer r >= 3")
    d = as_fraction(delta)
    lo, mid, hi = f1_window(r)
    if d < lo:
        return BoundEvaluation(1, r, d, _f1_lower(r, d), "out-of-range-low")
    if d <= mid:
        return BoundEvaluation(1, r, d, _f1_lower(r, d), "lower")
    if d <= hi:
        return BoundEvaluation(1, r, d, _f1_upper(r, d), "upper")
    return BoundEvaluation(1, r, d, _f1_upper(r, d), "out-of-range-high")


def f2(r: int, delta) -> BoundEvaluation:
    """Edge-density bound when the chromatic threshold is (r-3)/(r-2)."""
    if not isinstance(r, int) or r < 4:
        raise ValueError("f2 needs an integer r >= 4")
    d = as_fraction(delta)
    value = d * (1 - d) + (1 - d) ** 2 / 4 + (r - 4) * d * d / (2 * (r - 3))
    lo, hi = f2_window(r)
    regime = "in-range" if lo <= d <= hi else ("out-of-range-low" if d < lo else "out-of-range-high")
    return BoundEvaluation(2, r, d, value, regime)


def evaluate(theorem: int, r: int, delta) -> BoundEvaluation:
    if theorem == 1:
        return f1(r, delta)
    if theorem == 2:
        return f2(r, delta)
    raise ValueError("theorem must be 1 or 2")


def turan_density(r: int) -> Fraction:
    """Edge density (r-2)/(2(r-1)) of T_{r-1}(n), the densest K_r-free graph."""
    if r < 3:
        raise ValueError("r must be at least 3")
    return Fraction(r - 2, 2 * (r - 1))


# ------------------------------------------------------------------ trade-off form


@dataclass(frozen=True)
class TradeoffParams:
    """rho + A (delta - B)^2 > C forces bounded chromatic number."""

    A: Fraction
    B: Fraction
    C: Fraction
    regime: str

    def threshold(self, delta) -> Fraction:
        d = as_fraction(delta)
        return self.C - self.A * (d - self.B) ** 2


def tradeoff_params(r: int, regime: str) -> TradeoffParams:
    if r < 3:
        raise ValueError("r must be at least 3")
    if regime == "upper":
        q = 5 * r * r - 17 * r + 14
        return TradeoffParams(Fraction(q, 2), Fraction(5 * r * r - 22 * r + 23, q),
                              Fraction(5 * r * r - 22 * r + 25, 2 * q), "upper")
    if regime == "lower":
        return TradeoffParams(Fraction(2 * r - 2, 5 * r - 14), Fraction(2 * r - 5, 2 * r - 2),
                              Fraction(r - 2, 2 * r - 2), "lower")
    raise ValueError(f"unknown regime {regime!r}")


# ------------------------------------------------------------------ regularity bookkeeping


def reduced_edge_bound(eR, n, k, d, eps):
    """Right-hand side e(R) n^2/k^2 + (d/2 + 2 eps) n^2 of the reduced-graph edge count.

    Requires 1/k <= 2 eps and 0 <= d < 1.
    """
    if k <= 0 or Fraction(1, k) > 2 * eps:
        raise ValueError("need 1/k <= 2*eps")
    if not 0 <= d < 1:
        raise ValueError("need 0 <= d < 1")
    return eR * n * n / (k * k) + (d / 2 + 2 * eps) * n * n


# ------------------------------------------------------------------ the quadratic program


def g_claim(x, y, r: int):
    """g(x, y) = x(1-x) + y(1-x-y) + (r-4)/(2(r-3)) y^2; works on scalars, Fractions and arrays.

    For r = 3 the y^2 coefficient is taken as 0.
    """
    coef = Fraction(0) if r == 3 else Fraction(r - 4, 2 * (r - 3))
    if isinstance(x, np.ndarray) or isinstance(y, np.ndarray):
        coef = float(coef)
    return x * (1 - x) + y * (1 - x - y) + coef * y * y


def _require_claim_r(r: int) -> None:
    if not isinstance(r, int) or r < 4:
        raise ValueError("the quadratic program needs r >= 4 (the Y-parts are empty for r = 3)")


def lagrangian_stationary(r: int, delta) -> tuple[Fraction, Fraction]:
    """Maximiser of g on the line x/2 + y = delta."""
    _require_claim_r(r)
    d = as_fraction(delta)
    x = Fraction(2) * (4 * d - r * d + r - 3) / (5 * r - 14)
    y = (6 * d - 1) * (r - 3) / (5 * r - 14)
    return x, y


def boundary_h(r: int, delta, y) -> Fraction:
    """g restricted to x = 2 delta - 2y."""
    d = as_fraction(delta)
    y = as_fraction(y)
    return g_claim(2 * d - 2 * y, y, r)


def boundary_h_slope(r: int, delta, y) -> Fraction:
    """h'(y) = 6 delta - 1 - (5r-14)/(r-3) y."""
    d = as_fraction(delta)
    return 6 * d - 1 - Fraction(5 * r - 14, r - 3) * as_fraction(y)


@dataclass
class ClaimReport:
    r: int
    delta: Fraction
    grid_step: float
    regime: str
    f1_value: Fraction
    grid_points: int
    max_excess: float
    argmax: tuple[float, float]
    analytic_point: tuple[Fraction, Fraction]
    analytic_value: Fraction
    analytic_gap: Fraction
    line_ok: bool
    tolerance: float = 1e-9

    @property
    def passed(self) -> bool:
        return self.max_excess <= self.tolerance and self.analytic_gap == 0 and self.line_ok

    def to_dict(self) -> dict:
        return {
            "r": self.r, "delta": str(self.delta), "grid_step": self.grid_step, "regime": self.regime,
            "f1": str(self.f1_value), "grid_points": self.grid_points, "max_excess": self.max_excess,
            "argmax": list(self.argmax),
            "analytic_point": [str(v) for v in self.analytic_point],
            "analytic_value": str(self.analytic_value), "analytic_gap": str(self.analytic_gap),
            "line_ok": self.line_ok, "passed": self.passed,
        }


def verify_claim(r: int, delta, grid_step: float = 1e-3, tolerance: float = 1e-9) -> ClaimReport:
    """Check g(x, y) <= f1(r, delta) on the feasible region.

    Feasible: 0 <= x, y <= 1, y <= (r-3)(1-delta), x/2 + y >= delta. A grid scan gives the
    numerical maximum of g - f1; the analytic maximiser is checked in exact arithmetic
    (stationary point on the lower interval, the corner y = (r-3)(1-delta) on the upper).
    """
    _require_claim_r(r)
    d = as_fraction(delta)
    if grid_step > 1e-2:
        raise ValueError("grid_step must be at most 1e-2")
    ev = f1(r, d)
    if not ev.in_range:
        raise ValueError(f"delta={d} lies outside the f1 window for r={r}")
    target = ev.value
    ycap = min(Fraction(1), (r - 3) * (1 - d))
    steps = int(round(1 / grid_step))
    xs = np.linspace(0.0, 1.0, steps + 1)
    ys = xs[xs <= float(ycap) + 1e-15]
    X, Y = np.meshgrid(xs, ys, indexing="ij")
    feasible = X / 2 + Y >= float(d) - 1e-15
    G = g_claim(X, Y, r) - float(target)
    G = np.where(feasible, G, -np.inf)
    idx = np.unravel_index(np.argmax(G), G.shape)
    max_excess = float(G[idx])

    if ev.regime == "lower":
        px, py = lagrangian_stationary(r, d)
        line_ok = px / 2 + py == d and px >= 0 and 0 <= py <= (r - 3) * (1 - d)
    else:
        py = (r - 3) * (1 - d)
        px = 2 * d - 2 * py
        # h is increasing up to the corner, so the corner maximises g on the region
        line_ok = px >= 0 and boundary_h_slope(r, d, py) >= 0
    value = g_claim(px, py, r)
    return ClaimReport(
        r=r, delta=d, grid_step=grid_step, regime=ev.regime, f1_value=target,
        grid_points=int(feasible.sum()), max_excess=max_excess,
        argmax=(float(X[idx]), float(Y[idx])), analytic_point=(px, py),
        analytic_value=value, analytic_gap=target - value, line_ok=bool(line_ok), tolerance=tolerance,
    )


# ------------------------------------------------------------------ sweeps


@dataclass(frozen=True)
class SweepRow:
    delta: Fraction
    value: Fraction
    regime: str
    lower: Fraction | None = None
    upper: Fraction | None = None


def sweep(theorem: int, r: int, start, stop, step) -> list[SweepRow]:
    """Rows (delta, bound, regime) for delta = start, start+step, ..., <= stop."""
    a, b, h = as_fraction(start), as_fraction(stop), as_fraction(step)
    if a > b:
        raise ValueError("sweep needs from <= to")
    if h <= 0:
        raise ValueError("sweep step must be positive")
    rows = []
    d = a
    while d <= b:
        ev = evaluate(theorem, r, d)
        if theorem == 1:
            rows.append(SweepRow(d, ev.value, ev.regime, _f1_lower(r, d), _f1_upper(r, d)))
        else:
            rows.append(SweepRow(d, ev.value, ev.regime))
        d += h
    return rows


def sweep_csv(rows: Iterable[SweepRow], branches: bool = False) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    header = ["delta", "value", "regime"] + (["lower", "upper"] if branches else [])
    w.writerow(header)
    for row in rows:
        out = [fmt(row.delta), fmt(row.value), row.regime]
        if branches:
            out += [fmt(row.lower) if row.lower is not None else "",
                    fmt(row.upper) if row.upper is not None else ""]
        w.writerow(out)
    return buf.getvalue()
