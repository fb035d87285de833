"""Finite instances of the blow-up constructions that make the f1 and f2 bounds tight.

Vertices are laid out as core, X, Y_1..Y_{r-3}, Z. The Borsuk-type core is a ring of
points on a circle (U') together with the X points; antipodal-ish pairs are adjacent.
"""

from __future__ import annotations

import json
import math
import os
import warnings
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path

from . import algorithms as alg
from .bounds import as_fraction, f1, f1_window, f2, f2_window
from .graph import (
    NAMED_GRAPHS,
    Graph,
    RolePartition,
    bits,
    edges_within,
    graph_from_code,
    pair_list,
)

KINDS = ("bh-star", "bh-star-star", "eg")
CORE_BUDGET = Fraction(1, 50)


class ConstructionError(ValueError):
    pass


# ---------------------------------------------------------------- part sizes


@dataclass(frozen=True)
class PartSizes:
    X: int
    Y: tuple[int, ...]
    Z: int
    targets: dict = field(default_factory=dict, compare=False)  # exact rational targets

    @property
    def total(self) -> int:
        return self.X + sum(self.Y) + self.Z

    def as_dict(self) -> dict:
        return {"X": self.X, "Y": list(self.Y), "Z": self.Z}


def _round(q: Fraction) -> int:
    return int(math.floor(q + Fraction(1, 2)))


def bh_star_ratios(r: int, delta) -> tuple[Fraction, Fraction]:
    """(|Y_i|/|X|, |Z|/|X|) for the upper-regime blow-up."""
    d = as_fraction(delta)
    den = 2 * d - 2 * (r - 3) * (1 - d)
    if den <= 0:
        raise ConstructionError(f"ratio denominator {den} is not positive; delta out of range")
    return (1 - d) / den, (1 - 2 * d + (r - 3) * (1 - d)) / den


def bh_star_star_ratios(r: int, delta) -> tuple[Fraction, Fraction]:
    """(|Y_i|/|X|, |Z|/|X|) for the lower-regime blow-up."""
    d = as_fraction(delta)
    den = 2 * (d * (5 * r - 14) - (r - 3) * (6 * d - 1))
    if den <= 0:
        raise ConstructionError(f"ratio denominator {den} is not positive; delta out of range")
    return (6 * d - 1) / den, ((1 - 2 * d) * (5 * r - 14) + (r - 3) * (6 * d - 1)) / den


def _sizes_from_x(r: int, ratios: tuple[Fraction, Fraction], x_size: int) -> PartSizes:
    if x_size < 1:
        raise ConstructionError("x_size must be at least 1")
    ry, rz = ratios
    if ry < 0 or rz < 0:
        raise ConstructionError("negative part ratio; delta out of range")
    y = ry * x_size
    z = rz * x_size
    return PartSizes(x_size, (_round(y),) * (r - 3), _round(z), {"X": Fraction(x_size), "Y_i": y, "Z": z})


def part_sizes_bh_star(r: int, delta, x_size: int) -> PartSizes:
    return _sizes_from_x(r, bh_star_ratios(r, delta), x_size)


def part_sizes_bh_star_star(r: int, delta, x_size: int) -> PartSizes:
    return _sizes_from_x(r, bh_star_star_ratios(r, delta), x_size)


def part_sizes_eg(r: int, delta, scale: int, core_size: int = 0) -> PartSizes:
    """|Y_i| = delta m/(r-3) and |X| = |Z| = (1-delta) m/2 where m = scale - core_size."""
    if r < 4:
        raise ConstructionError("EG needs r >= 4")
    d = as_fraction(delta)
    lo, hi = f2_window(r)
    if not lo <= d <= hi:
        raise ConstructionError(f"delta={d} outside [{lo}, {hi}]")
    m = scale - core_size
    if m <= 0:
        raise ConstructionError("scale too small for the core")
    yi = d * m / (r - 3)
    xz = (1 - d) * m / 2
    return _fit_total(r, xz, yi, xz, m)


def _fit_total(r: int, x: Fraction, yi: Fraction, z: Fraction, total: int) -> PartSizes:
    """Round to integers summing to ``total``: equal Y parts to nearest, X and Z share the rest."""
    y = _round(yi)
    rest = total - (r - 3) * y
    if rest < 0:
        raise ConstructionError("part-size rounding failed")
    fx = _round(rest * x / (x + z)) if x + z else 0
    return PartSizes(fx, (y,) * (r - 3), rest - fx, {"X": x, "Y_i": yi, "Z": z})


# ---------------------------------------------------------------- cores


def _angle_gap(a: float, b: float) -> float:
    t = abs(a - b) % (2 * math.pi)
    return min(t, 2 * math.pi - t)


@dataclass
class Core:
    graph: Graph
    roles: RolePartition
    name: str
    params: dict

    @property
    def size(self) -> int:
        return self.graph.n


def borsuk_circle_core(m: int, eps: float, x_count: int) -> Core:
    """Ring U' of m points plus X of x_count points on the unit circle.

    u ~ u' when their angular distance exceeds pi - eps, u ~ x when it exceeds
    pi/2 + eps/2; X is independent.
    """
    if not 0 < eps < math.pi / 3:
        raise ConstructionError("eps must lie in (0, pi/3)")
    if m < 3 or x_count < 3:
        raise ConstructionError("need at least 3 ring points and 3 X points")
    # offset X by half a step so no X point sits exactly on a threshold
    ua = [2 * math.pi * i / m for i in range(m)]
    xa = [2 * math.pi * (j + 0.5) / x_count for j in range(x_count)]
    n = m + x_count
    adj = [0] * n
    for i in range(m):
        for j in range(i + 1, m):
            if _angle_gap(ua[i], ua[j]) > math.pi - eps:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        for j, a in enumerate(xa):
            if _angle_gap(ua[i], a) > math.pi / 2 + eps / 2:
                adj[i] |= 1 << (m + j)
                adj[m + j] |= 1 << i
    g = Graph(n, tuple(adj))
    xmask = ((1 << x_count) - 1) << m
    roles = RolePartition({"U'": frozenset(range(m)), "X": frozenset(range(m, n))})
    if edges_within(g, xmask):
        raise ConstructionError("X is not independent")
    for i in range(m):
        for j in bits(adj[i] & ((1 << m) - 1)):
            if adj[i] & adj[j]:
                raise ConstructionError("triangle in the circle core")
    need = (0.5 - eps) * x_count
    for i in range(m):
        if (adj[i] & xmask).bit_count() < need:
            raise ConstructionError(f"ring vertex {i} sees too few X vertices")
    return Core(g, roles, "circle", {"m": m, "eps": eps, "x_count": x_count})


def named_core(name: str) -> Graph:
    try:
        return NAMED_GRAPHS[name]()
    except KeyError:
        raise ConstructionError(f"unknown core {name!r}; choose from {sorted(NAMED_GRAPHS)}") from None


# ---------------------------------------------------------------- small-subgraph check


def _cache_dir() -> Path:
    base = os.environ.get("CHROMWIN_CACHE_DIR")
    return Path(base) if base else Path.home() / ".cache" / "chromwin"


def small_three_chromatic_near_acyclic(max_n: int = 6) -> dict:
    """Are all triangle-free 3-chromatic graphs on at most max_n vertices near-acyclic?

    Any triangle-free core then satisfies the small-subgraph property up to that size.
    The verdict is cached as JSON under CHROMWIN_CACHE_DIR (default ~/.cache/chromwin).
    """
    from .threshold import is_near_acyclic

    path = _cache_dir() / f"tf3_near_acyclic_{max_n}.json"
    try:
        return json.loads(path.read_text())
    except (OSError, ValueError):
        pass
    checked = 0
    failures: list[list[int]] = []
    for n in range(5, max_n + 1):
        for code in range(1 << len(pair_list(n))):
            g = graph_from_code(n, code)
            if alg.has_clique(g, 3) or alg.is_bipartite(g):
                continue
            checked += 1
            ok, _ = is_near_acyclic(g, check_chi=False)
            if not ok:
                failures.append([n, code])
    out = {"max_n": max_n, "checked": checked, "all_near_acyclic": not failures, "failures": failures[:16]}
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(out))
    except OSError:
        pass
    return out


# ---------------------------------------------------------------- assembly


@dataclass
class ConstructionReport:
    kind: str
    r: int
    delta: Fraction
    n: int
    parts: dict
    edges: int
    min_degree: int
    density: float
    target: Fraction
    deviation: float
    clique_number: int | None
    core: dict
    targets: dict = field(default_factory=dict)
    min_degree_ratio: float = 0.0
    warnings: list[str] = field(default_factory=list)
    h_free: bool | None = None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["delta"] = str(self.delta)
        d["target"] = str(self.target)
        d["targets"] = {k: str(v) for k, v in self.targets.items()}
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)


@dataclass
class Construction:
    graph: Graph
    roles: RolePartition
    report: ConstructionReport


def _assemble(core: Graph, core_roles: dict, sizes: PartSizes, eg: bool):
    """Lay out core, X (possibly inside the core), Y_i, Z and add the join edges."""
    c = core.n
    adj = list(core.adj)
    roles = {k: set(v) for k, v in core_roles.items()}
    if eg:
        xs = list(range(c, c + sizes.X))
        nxt = c + sizes.X
    else:
        xs = sorted(roles["X"])
        nxt = c
    ys = []
    for k in sizes.Y:
        ys.append(list(range(nxt, nxt + k)))
        nxt += k
    zs = list(range(nxt, nxt + sizes.Z))
    n = nxt + sizes.Z
    adj += [0] * (n - c)

    def mask(vs):
        m = 0
        for v in vs:
            m |= 1 << v
        return m

    xm, zm = mask(xs), mask(zs)
    ymasks = [mask(p) for p in ys]
    yall = 0
    for ym in ymasks:
        yall |= ym
    outer = ((1 << n) - 1) & ~yall  # everything outside Y is joined to all of Y
    for v in xs:
        adj[v] |= zm | yall
    for v in zs:
        adj[v] |= xm | yall
    for i, p in enumerate(ys):
        others = yall & ~ymasks[i]
        for v in p:
            adj[v] |= others | outer
    if not eg:
        for v in range(c):
            if v not in roles["X"]:
                adj[v] |= yall
    else:
        for v in range(c):
            adj[v] |= yall
    g = Graph(n, tuple(adj))
    out = dict(core_roles)
    out["X"] = frozenset(xs)
    for i, p in enumerate(ys, 1):
        out[f"Y{i}"] = frozenset(p)
    out["Z"] = frozenset(zs)
    return g, RolePartition(out)


def _core_diagnostics(core: Graph, name: str, params: dict, ring: int | None = None) -> dict:
    tri = not alg.has_clique(core, 3)
    ring_graph = core if ring is None else _ring(core, ring)
    d = {
        "name": name,
        "size": core.n,
        "ring_size": ring_graph.n,
        "triangle_free": tri,
        "girth": None if math.isinf(g := alg.girth(ring_graph)) else int(g),
        "bipartite": alg.is_bipartite(core),
        "chi": alg.chromatic_number(ring_graph, cap=64) if ring_graph.n <= 64 else None,
    }
    d.update(params)
    return d


def _ring(core: Graph, m: int) -> Graph:
    from .graph import induced

    return induced(core, range(m))


def _finish(kind: str, r: int, d: Fraction, g: Graph, roles: RolePartition, sizes: PartSizes,
            target: Fraction, core_info: dict, notes: list[str], clique: bool, h: Graph | None) -> Construction:
    rep = density_report(g, r, d, target, kind=kind, parts=sizes.as_dict(), core=core_info,
                         clique=clique, h=h)
    rep.targets = dict(sizes.targets)
    rep.warnings.extend(notes)
    return Construction(g, roles, rep)


def density_report(g: Graph, r: int, delta, target, kind: str = "graph", parts: dict | None = None,
                   core: dict | None = None, clique: bool = True, h: Graph | None = None,
                   budget: int | None = 5 * 10**6) -> ConstructionReport:
    """Edge density e/n^2 against a target, minimum degree and (optionally) clique number."""
    d = as_fraction(delta)
    target = as_fraction(target)
    e = g.edge_count
    n = g.n
    density = e / (n * n) if n else 0.0
    mind = g.min_degree if n else 0
    notes: list[str] = []
    omega = None
    if clique:
        try:
            omega = alg.clique_number(g, budget=budget)
        except alg.SearchBudgetExceeded as exc:
            notes.append(str(exc))
    hfree = None
    if h is not None:
        try:
            hfree = not alg.contains_subgraph(h, g)
        except alg.SearchBudgetExceeded as exc:
            notes.append(str(exc))
    return ConstructionReport(
        kind=kind, r=r, delta=d, n=n, parts=parts or {}, edges=e, min_degree=mind,
        density=density, target=target, deviation=abs(density - float(target)),
        clique_number=omega, core=core or {}, min_degree_ratio=mind / n if n else 0.0,
        warnings=notes, h_free=hfree,
    )


def _check_regime(kind: str, r: int, d: Fraction, notes: list[str]) -> None:
    lo, mid, hi = f1_window(r)
    ok = (mid < d <= hi) if kind == "bh-star" else (lo <= d <= mid)
    if not ok:
        msg = f"{kind} built at delta={d} outside its regime for r={r}"
        warnings.warn(msg, stacklevel=3)
        notes.append(msg)


def build_bh_star(r: int, delta, n: int, ring: int | None = None, eps: float = 0.05,
                  core_budget: Fraction = CORE_BUDGET, clique: bool = True,
                  h: Graph | None = None) -> Construction:
    return _build_bh("bh-star", r, delta, n, ring, eps, core_budget, clique, h)


def build_bh_star_star(r: int, delta, n: int, ring: int | None = None, eps: float = 0.05,
                       core_budget: Fraction = CORE_BUDGET, clique: bool = True,
                       h: Graph | None = None) -> Construction:
    return _build_bh("bh-star-star", r, delta, n, ring, eps, core_budget, clique, h)


def _build_bh(kind, r, delta, n, ring, eps, core_budget, clique, h) -> Construction:
    if r < 3:
        raise ConstructionError("r must be at least 3")
    d = as_fraction(delta)
    notes: list[str] = []
    _check_regime(kind, r, d, notes)
    ratios = bh_star_ratios(r, d) if kind == "bh-star" else bh_star_star_ratios(r, d)
    if ring is None:
        ring = max(4, int(core_budget * n) // 2 * 2)
    per_x = 1 + (r - 3) * ratios[0] + ratios[1]
    x_exact = (n - ring) / per_x
    if x_exact < 3:
        raise ConstructionError("n too small for this construction")
    sizes = _fit_total(r, x_exact, ratios[0] * x_exact, ratios[1] * x_exact, n - ring)
    x_size = sizes.X
    core = borsuk_circle_core(ring, eps, x_size)
    g, roles = _assemble(core.graph, {"U'": core.roles["U'"], "X": core.roles["X"]}, sizes, eg=False)
    target = f1(r, d).value
    info = _core_diagnostics(core.graph, "circle", core.params, ring=ring)
    info["small_subgraphs_near_acyclic"] = small_three_chromatic_near_acyclic()["all_near_acyclic"]
    return _finish(kind, r, d, g, roles, sizes, target, info, notes, clique, h)


def build_eg(r: int, delta, n: int, core: str | Graph = "petersen", core_budget: Fraction = CORE_BUDGET,
             clique: bool = True, h: Graph | None = None) -> Construction:
    d = as_fraction(delta)
    E = named_core(core) if isinstance(core, str) else core
    name = core if isinstance(core, str) else "custom"
    if alg.girth(E) < 4:
        raise ConstructionError("the core must have girth at least 4")
    if E.n > core_budget * n:
        raise ConstructionError(f"core of {E.n} vertices exceeds {core_budget} of n={n}")
    sizes = part_sizes_eg(r, d, n, E.n)
    g, roles = _assemble(E, {"E": frozenset(range(E.n))}, sizes, eg=True)
    info = _core_diagnostics(E, name, {})
    return _finish("eg", r, d, g, roles, sizes, f2(r, d).value, info, [], clique, h)


def build(kind: str, r: int, delta, n: int, **kw) -> Construction:
    if kind == "bh-star":
        return build_bh_star(r, delta, n, **kw)
    if kind == "bh-star-star":
        return build_bh_star_star(r, delta, n, **kw)
    if kind == "eg":
        return build_eg(r, delta, n, **kw)
    raise ConstructionError(f"unknown kind {kind!r}; choose from {KINDS}")
