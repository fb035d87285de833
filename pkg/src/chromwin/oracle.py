"""Exhaustive and seeded-random checks of the finite statements behind the bounds.

Every scan walks labelled graphs by edge code (bit k of the code is pair k of
:func:`chromwin.graph.pair_list`). Ranges are cut into contiguous shards, run on a
process pool and merged in shard order, so the totals never depend on ``workers``.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from . import algorithms as alg
from . import kernels
from .bounds import f1_window, verify_claim
from .graph import Graph, bits, graph_from_code, graph_from_edges, induced, pair_list, parse_edge_list, to_mask, turan_edge_count
from .zykov import MODES, is_symmetric_on, is_xyr_free, symmetrize_trace, zykov_step

WITNESS_CAP = 16


@dataclass
class OracleReport:
    statement: str
    params: dict
    corpus: dict = field(default_factory=dict)  # n -> graphs enumerated
    checked: int = 0
    violations: list[dict] = field(default_factory=list)
    violation_count: int = 0
    witnesses: list[dict] = field(default_factory=list)  # equality / boundary instances
    extra: dict = field(default_factory=dict)
    wall_time: float = 0.0
    backend: str = kernels.BACKEND

    @property
    def passed(self) -> bool:
        return self.violation_count == 0

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        total = sum(self.corpus.values())
        return (f"{self.statement} {verdict}: {total} graphs, {self.checked} checks, "
                f"{self.violation_count} violations, {len(self.witnesses)} witnesses kept")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["corpus"] = {str(k): v for k, v in self.corpus.items()}
        d["passed"] = self.passed
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, d: dict) -> "OracleReport":
        d = dict(d)
        d.pop("passed", None)
        d["corpus"] = {int(k) if str(k).isdigit() else k: v for k, v in d.get("corpus", {}).items()}
        return cls(**d)


# ---------------------------------------------------------------- sharding


def _shards(total: int, workers: int) -> list[tuple[int, int]]:
    parts = max(1, min(total, 4 * max(1, workers)))
    step = -(-total // parts)
    return [(s, min(total, s + step)) for s in range(0, total, step)]


def _run_sharded(fn: Callable, args_prefix: tuple, total: int, workers: int, kwargs: dict | None = None) -> list:
    kwargs = kwargs or {}
    shards = _shards(total, workers)
    if workers <= 1 or len(shards) == 1:
        return [fn(*args_prefix, a, b, **kwargs) for a, b in shards]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        futs = [ex.submit(fn, *args_prefix, a, b, **kwargs) for a, b in shards]
        return [f.result() for f in futs]


def _mask_list(mask: int) -> list[int]:
    return list(bits(mask))


def _witness_graph(n: int, code: int) -> dict:
    return {"n": n, "code": code, "graph": graph_from_code(n, code).to_edge_list_text()}


# ---------------------------------------------------------------- lemma: K_t-free part A


def lemma_basic_bound(n: int, r: int, t: int, a: int) -> int:
    """e(T_{t-1}(a) v T_{r-t}(n-a))."""
    return turan_edge_count(t - 1, a) + turan_edge_count(r - t, n - a) + a * (n - a)


def verify_lemma_basic(n_max: int, r: int, t: int, workers: int = 1, n_min: int = 1,
                       cap: int = WITNESS_CAP) -> OracleReport:
    """All labelled K_r-free G on n <= n_max and all A with G[A] K_t-free, a(r-1) >= (t-1)n."""
    if not 2 <= t < r:
        raise ValueError("need 2 <= t < r")
    if n_max > 7:
        raise alg.InstanceTooLarge("built-in enumeration is capped at n <= 7")
    t0 = time.perf_counter()
    rep = OracleReport("lemma-basic", {"n_max": n_max, "r": r, "t": t})
    below = below_bad = kr_free = 0
    for n in range(n_min, n_max + 1):
        total = 1 << len(pair_list(n))
        parts = _run_sharded(kernels.scan_lemma_basic, (n, r, t), total, workers, {"eq_cap": cap})
        rep.corpus[n] = sum(p["graphs"] for p in parts)
        rep.checked += sum(p["checked"] for p in parts)
        kr_free += sum(p["kr_free"] for p in parts)
        below += sum(p["below_checked"] for p in parts)
        below_bad += sum(p["below_violations"] for p in parts)
        viols = sorted(v for p in parts for v in p["violations"])
        rep.violation_count += len(viols)
        for code, A in viols[:cap]:
            rep.violations.append({**_witness_graph(n, code), "A": _mask_list(A)})
        for a in range(n + 1):
            items = sorted(w for p in parts for w in p["equalities"][a])[:cap]
            count = sum(p["eq_counts"][a] for p in parts)
            if count:
                rep.extra.setdefault("equality_counts", {})[f"n={n},a={a}"] = count
            for code, A in items:
                rep.witnesses.append({**_witness_graph(n, code), "A": _mask_list(A), "a": a,
                                      "bound": lemma_basic_bound(n, r, t, a)})
    rep.extra.update({"kr_free": kr_free, "below_threshold_checked": below,
                      "below_threshold_exceeding": below_bad})
    rep.wall_time = time.perf_counter() - t0
    return rep


def replay_lemma_basic(w: dict, r: int, t: int) -> str:
    """"violation", "equality" or "strict" for one stored (graph, A) instance."""
    g = parse_edge_list(w["graph"])
    A = w["A"]
    n, a = g.n, len(A)
    if alg.has_clique(g, r) or alg.has_clique(induced(g, A), t) or a * (r - 1) < (t - 1) * n:
        return "hypothesis-fails"
    e, bound = g.edge_count, lemma_basic_bound(n, r, t, a)
    return "violation" if e > bound else ("equality" if e == bound else "strict")


# ---------------------------------------------------------------- lemma: X, Y, Z partition


def lemma_xyz_rhs2(r: int, x: int, y: int, z: int) -> int:
    """2(r-3) times the right-hand side, kept integral."""
    return (r - 4) * y * y + 2 * (r - 3) * (x * y + y * z + z * x)


def verify_lemma_xyz(n_max: int, r: int, workers: int = 1, n_min: int = 1,
                     cap: int = WITNESS_CAP) -> OracleReport:
    if r < 4:
        raise ValueError("need r >= 4")
    if n_max > 7:
        raise alg.InstanceTooLarge("built-in enumeration is capped at n <= 7")
    t0 = time.perf_counter()
    rep = OracleReport("lemma-xyz", {"n_max": n_max, "r": r})
    kr_free = 0
    for n in range(n_min, n_max + 1):
        total = 1 << len(pair_list(n))
        parts = _run_sharded(kernels.scan_lemma_xyz, (n, r), total, workers, {"eq_cap": cap})
        rep.corpus[n] = sum(p["graphs"] for p in parts)
        rep.checked += sum(p["checked"] for p in parts)
        kr_free += sum(p["kr_free"] for p in parts)
        viols = sorted(v for p in parts for v in p["violations"])
        rep.violation_count += len(viols)
        for code, X, Y in viols[:cap]:
            rep.violations.append({**_witness_graph(n, code), "X": _mask_list(X), "Y": _mask_list(Y)})
        nb = (n + 1) * (n + 1)
        for b in range(nb):
            count = sum(p["eq_counts"][b] for p in parts)
            if not count:
                continue
            y, x = divmod(b, n + 1)
            rep.extra.setdefault("equality_counts", {})[f"n={n},x={x},y={y}"] = count
            for code, X, Y in sorted(w for p in parts for w in p["equalities"][b])[:cap]:
                rep.witnesses.append({**_witness_graph(n, code), "X": _mask_list(X), "Y": _mask_list(Y)})
    rep.extra["kr_free"] = kr_free
    rep.wall_time = time.perf_counter() - t0
    return rep


def replay_lemma_xyz(w: dict, r: int) -> str:
    g = parse_edge_list(w["graph"])
    X, Y = w["X"], w["Y"]
    Z = [v for v in range(g.n) if v not in set(X) | set(Y)]
    x, y, z = len(X), len(Y), len(Z)
    if (alg.has_clique(g, r) or alg.has_clique(induced(g, Y), r - 2)
            or alg.has_clique(induced(g, X + Y), r - 1) or not (y >= (r - 3) * x and x >= z)):
        return "hypothesis-fails"
    lhs, rhs = 2 * (r - 3) * g.edge_count, lemma_xyz_rhs2(r, x, y, z)
    return "violation" if lhs > rhs else ("equality" if lhs == rhs else "strict")


# ---------------------------------------------------------------- minimum degree forces colourability


def _aes_single(g: Graph, r: int) -> str:
    n = g.n
    cmp = g.min_degree * (3 * r - 4) - (3 * r - 7) * n if n else -1
    if cmp < 0 or alg.has_clique(g, r):
        return "skip"
    colourable = alg.is_colorable(g, r - 1)
    if cmp > 0:
        return "ok" if colourable else "violation"
    return "at-threshold" if colourable else "boundary"


def verify_aes(n_max: int, r: int, workers: int = 1, n_min: int = 1, corpus: Iterable[Graph] | None = None,
               cap: int = WITNESS_CAP) -> OracleReport:
    """K_r-free G with min degree > (3r-7)n/(3r-4) is (r-1)-colourable.

    With ``corpus`` (e.g. a graph6 stream) those graphs are checked instead of the
    labelled enumeration.
    """
    if r < 3:
        raise ValueError("need r >= 3")
    t0 = time.perf_counter()
    rep = OracleReport("aes", {"n_max": n_max, "r": r, "corpus": "stream" if corpus is not None else "labelled"})
    if corpus is not None:
        boundary = 0
        for idx, g in enumerate(corpus):
            rep.corpus[g.n] = rep.corpus.get(g.n, 0) + 1
            verdict = _aes_single(g, r)
            if verdict in ("skip", "at-threshold"):
                continue
            if verdict != "boundary":
                rep.checked += 1
            if verdict == "violation":
                rep.violation_count += 1
                if len(rep.violations) < cap:
                    rep.violations.append({"index": idx, "n": g.n, "graph": g.to_edge_list_text()})
            elif verdict == "boundary":
                boundary += 1
                if len(rep.witnesses) < cap:
                    rep.witnesses.append({"index": idx, "n": g.n, "graph": g.to_edge_list_text()})
        rep.extra["boundary_count"] = boundary
        rep.wall_time = time.perf_counter() - t0
        return rep
    if n_max > 7:
        raise alg.InstanceTooLarge("built-in enumeration is capped at n <= 7; pass a graph6 corpus")
    boundary = 0
    for n in range(n_min, n_max + 1):
        total = 1 << len(pair_list(n))
        parts = _run_sharded(kernels.scan_aes, (n, r), total, workers, {"eq_cap": cap})
        rep.corpus[n] = sum(p["graphs"] for p in parts)
        rep.checked += sum(p["checked"] for p in parts)
        viols = sorted(c for p in parts for c in p["violations"])
        rep.violation_count += len(viols)
        rep.violations.extend(_witness_graph(n, c) for c in viols[:cap])
        bcount = sum(p["boundary_count"] for p in parts)
        boundary += bcount
        rep.witnesses.extend(_witness_graph(n, c) for c in sorted(c for p in parts for c in p["boundary"])[:cap])
    rep.extra["boundary_count"] = boundary
    rep.wall_time = time.perf_counter() - t0
    return rep


def replay_aes(w: dict, r: int) -> str:
    return _aes_single(parse_edge_list(w["graph"]), r)


# ---------------------------------------------------------------- Hall deficiency


def verify_hall(a_max: int, b_max: int, workers: int = 1, cap: int = WITNESS_CAP) -> OracleReport:
    """|X| - max(|S| - |N(S)|) equals the maximum matching, over every bipartite B(X, Y)."""
    t0 = time.perf_counter()
    rep = OracleReport("hall", {"a_max": a_max, "b_max": b_max})
    for a in range(1, a_max + 1):
        for b in range(1, b_max + 1):
            total = 1 << (a * b)
            parts = _run_sharded(kernels.scan_hall, (a, b), total, workers, {"cap": cap})
            rep.corpus[f"{a}x{b}"] = sum(p["graphs"] for p in parts)
            rep.checked += sum(p["graphs"] for p in parts)
            rep.violation_count += sum(p["mismatch_count"] for p in parts)
            for code, formula, mm in sorted(m for p in parts for m in p["mismatches"])[:cap]:
                rep.violations.append({"a": a, "b": b, "code": code, "formula": formula, "matching": mm})
    rep.wall_time = time.perf_counter() - t0
    return rep


def hall_bipartite(a: int, b: int, code: int) -> Graph:
    """The bipartite graph encoded row-wise: row i (b bits) lists the Y-neighbours of x_i."""
    rowmask = (1 << b) - 1
    edges = [(i, a + j) for i in range(a) for j in bits((code >> (i * b)) & rowmask)]
    return graph_from_edges(a + b, edges)


# ---------------------------------------------------------------- symmetrization


def _random_graph(rng: random.Random, n: int) -> Graph:
    p = rng.random()
    return graph_from_edges(n, [(i, j) for j in range(n) for i in range(j) if rng.random() < p])


def _random_subset(rng: random.Random, n: int, p: float = 0.6) -> int:
    return to_mask(v for v in range(n) if rng.random() < p)


def symmetrization_instance(seed: int, trial: int, n_max: int = 9):
    """Instance ``trial`` of the seeded corpus: (G, A, X, Y, r, (u, v) or None)."""
    rng = random.Random(seed * 1_000_003 + trial)
    n = rng.randint(1, n_max)
    g = _random_graph(rng, n)
    A = _random_subset(rng, n)
    X = Y = 0
    for v in range(n):
        roll = rng.random()
        if roll < 0.35:
            X |= 1 << v
        elif roll < 0.8:
            Y |= 1 << v
    r = rng.choice((3, 4, 5))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v and not g.has_edge(u, v)]
    uv = rng.choice(pairs) if pairs else None
    return g, A, X, Y, r, uv


def check_symmetrization_instance(g: Graph, A: int, X: int, Y: int, r: int, uv, mode: str) -> list[str]:
    """Names of the properties that fail on this instance (empty list when all hold)."""
    bad: list[str] = []
    res = symmetrize_trace(g, A, mode)
    z = res.graph
    if z.edge_count < g.edge_count:
        bad.append("edges-monotone")
    if alg.clique_number(z) > alg.clique_number(g):
        bad.append("clique-monotone")
    if alg.clique_number(induced(z, bits(A))) > alg.clique_number(induced(g, bits(A))):
        bad.append("clique-monotone-on-A")
    if not is_symmetric_on(z, A):
        bad.append("non-adjacent-twins")
    if res.merges > max(A.bit_count() - 1, 0):
        bad.append("merge-count")
    if symmetrize_trace(z, A, mode).graph != z:
        bad.append("idempotent")
    if symmetrize_trace(g, A, mode).graph != z:
        bad.append("deterministic")
    if is_xyr_free(g, X, Y, r):
        if not is_xyr_free(symmetrize_trace(g, X, mode).graph, X, Y, r):
            bad.append("xyr-preserved-X")
        if not is_xyr_free(symmetrize_trace(g, Y, mode).graph, X, Y, r):
            bad.append("xyr-preserved-Y")
    if uv is not None:
        u, v = uv
        rest = induced(g, [w for w in range(g.n) if w != u])
        if alg.chromatic_number(zykov_step(g, u, v)) > alg.chromatic_number(rest):
            bad.append("chi-step")
    return bad


def _symmetrization_chunk(seed: int, n_max: int, modes: tuple[str, ...], start: int, stop: int) -> dict:
    out = {m: {"violations": [], "counts": {}} for m in modes}
    for trial in range(start, stop):
        inst = symmetrization_instance(seed, trial, n_max)
        for mode in modes:
            bad = check_symmetrization_instance(*inst, mode)
            for name in bad:
                out[mode]["counts"][name] = out[mode]["counts"].get(name, 0) + 1
            if bad:
                out[mode]["violations"].append((trial, bad))
    return out


def verify_symmetrization(trials: int = 10_000, seed: int = 0, n_max: int = 9, modes: Iterable[str] = MODES,
                          workers: int = 1, cap: int = WITNESS_CAP) -> OracleReport:
    """Seeded random (G, A, X, Y, r) instances; every property is checked in every mode."""
    modes = tuple(modes)
    for m in modes:
        if m not in MODES:
            raise ValueError(f"unknown mode {m!r}")
    t0 = time.perf_counter()
    rep = OracleReport("zykov", {"trials": trials, "seed": seed, "n_max": n_max, "modes": list(modes)})
    parts = _run_sharded(_symmetrization_chunk, (seed, n_max, modes), trials, workers)
    rep.corpus["instances"] = trials
    rep.checked = trials * len(modes)
    by_mode = {}
    for mode in modes:
        counts: dict[str, int] = {}
        viols = []
        for p in parts:
            for k, v in p[mode]["counts"].items():
                counts[k] = counts.get(k, 0) + v
            viols.extend(p[mode]["violations"])
        viols.sort()
        by_mode[mode] = {"failing_instances": len(viols), "property_counts": dict(sorted(counts.items()))}
        rep.violation_count += len(viols)
        for trial, bad in viols[:cap]:
            g, A, X, Y, r, uv = symmetrization_instance(seed, trial, n_max)
            rep.violations.append({"mode": mode, "trial": trial, "properties": bad, "graph": g.to_edge_list_text(),
                                   "A": _mask_list(A), "X": _mask_list(X), "Y": _mask_list(Y), "r": r,
                                   "uv": list(uv) if uv else None})
    rep.extra["by_mode"] = by_mode
    rep.wall_time = time.perf_counter() - t0
    return rep


def replay_symmetrization(w: dict) -> list[str]:
    g = parse_edge_list(w["graph"])
    uv = tuple(w["uv"]) if w.get("uv") else None
    return check_symmetrization_instance(g, to_mask(w["A"]), to_mask(w["X"]), to_mask(w["Y"]), w["r"], uv, w["mode"])


# ---------------------------------------------------------------- quadratic program


def claim_deltas(r: int, samples: int = 10) -> list[Fraction]:
    """``samples`` evenly spaced rationals across the f1 window, endpoints included."""
    lo, _, hi = f1_window(r)
    if samples == 1:
        return [lo]
    return [lo + (hi - lo) * i / (samples - 1) for i in range(samples)]


def _claim_chunk(jobs: list, grid_step: float, start: int, stop: int) -> list[dict]:
    return [verify_claim(r, d, grid_step).to_dict() for r, d in jobs[start:stop]]


def verify_claim_sweep(r_set: Iterable[int] = range(4, 9), samples: int = 10, grid_step: float = 1e-3,
                       workers: int = 1) -> OracleReport:
    t0 = time.perf_counter()
    r_list = list(r_set)
    jobs = [(r, d) for r in r_list for d in claim_deltas(r, samples)]
    rep = OracleReport("claim", {"r": r_list, "samples": samples, "grid_step": grid_step})
    parts = _run_sharded(_claim_chunk, (jobs, grid_step), len(jobs), workers)
    rows = [row for p in parts for row in p]
    rep.corpus["points"] = len(rows)
    rep.checked = len(rows)
    lower_exact = 0
    for row in rows:
        if not row["passed"]:
            rep.violation_count += 1
            rep.violations.append(row)
        if row["regime"] == "lower" and row["analytic_gap"] == "0" and row["line_ok"]:
            lower_exact += 1
    rep.extra["max_excess"] = max(row["max_excess"] for row in rows) if rows else None
    rep.extra["lower_regime_exact"] = lower_exact
    rep.extra["rows"] = rows
    rep.wall_time = time.perf_counter() - t0
    return rep


STATEMENTS = ("lemma-basic", "lemma-xyz", "aes", "zykov", "claim", "hall")
