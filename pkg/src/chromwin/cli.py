"""Command-line entry point: ``chromwin <subcommand> ...``.

Exit status: 0 success, 1 a verification found violations, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds, constructions, oracle, threshold, zykov
from .graph import Graph, GraphError, parse_edge_list
from .graph6 import Graph6Error, encode_graph6, parse_graph6, read_graph6_stream


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *a, **kw):
        kw.setdefault("allow_abbrev", False)
        super().__init__(*a, **kw)


def _rational(text: str):
    try:
        return bounds.parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"{exc} (use p/q or a terminating decimal)") from None


# ---------------------------------------------------------------- graph I/O


def detect_format(text: str) -> str:
    first = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
    parts = first.split()
    if len(parts) == 2 and all(p.isdigit() for p in parts):
        return "edges"
    return "graph6"


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def read_graph(path: str, fmt: str = "auto") -> Graph:
    text = _read_text(path)
    kind = detect_format(text) if fmt == "auto" else fmt
    try:
        if kind == "edges":
            return parse_edge_list(text)
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise UsageError(f"{path}: expected exactly one graph6 line, found {len(lines)}")
        return parse_graph6(lines[0])
    except GraphError as exc:
        raise UsageError(f"{path}: {exc}") from None


def write_graph(g: Graph, path: str | None, fmt: str) -> None:
    text = encode_graph6(g) + "\n" if fmt == "graph6" else g.to_edge_list_text()
    _write(text, path)


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def _vertex_set(text: str) -> list[int]:
    try:
        return sorted({int(p) for p in text.replace(",", " ").split()})
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad vertex list {text!r}") from None


# ---------------------------------------------------------------- subcommands


def cmd_bounds(args) -> int:
    ev = bounds.evaluate(args.theorem, args.r, args.delta)
    if args.json:
        print(json.dumps({"theorem": ev.theorem, "r": ev.r, "delta": str(ev.delta), "value": str(ev.value),
                          "decimal": float(ev.value), "regime": ev.regime}))
    else:
        print(ev)
    return 0


def cmd_sweep(args) -> int:
    rows = bounds.sweep(args.theorem, args.r, args.start, args.stop, args.step)
    if args.json:
        text = json.dumps([{"delta": str(r.delta), "value": str(r.value), "regime": r.regime} for r in rows]) + "\n"
    else:
        text = bounds.sweep_csv(rows, branches=args.branches)
    _write(text, args.out)
    return 0


def cmd_construct(args) -> int:
    kw = {"clique": not args.no_clique}
    if args.kind == "eg":
        kw["core"] = args.core or "petersen"
    else:
        if args.core not in (None, "circle"):
            raise UsageError("bh kinds use the circle core")
        if args.ring is not None:
            kw["ring"] = args.ring
        kw["eps"] = args.eps
    if args.forbid:
        kw["h"] = read_graph(args.forbid)
    c = constructions.build(args.kind, args.r, args.delta, args.n, **kw)
    rep = c.report
    if args.out:
        write_graph(c.graph, args.out, args.graph_format)
    if args.json:
        print(rep.to_json())
    else:
        print(f"{rep.kind} r={rep.r} delta={rep.delta} n={rep.n} parts={rep.parts}")
        print(f"edges={rep.edges} density={rep.density:.6f} target={rep.target} ({float(rep.target):.6f}) "
              f"deviation={rep.deviation:.6f}")
        print(f"min_degree={rep.min_degree} ({rep.min_degree_ratio:.4f} n) clique_number={rep.clique_number}")
        print("core: " + ", ".join(f"{k}={v}" for k, v in rep.core.items()))
        for w in rep.warnings:
            print(f"warning: {w}")
    return 0


def cmd_classify(args) -> int:
    g = read_graph(args.input, args.format)
    tc = threshold.chromatic_threshold(g, order_seed=args.seed)
    if args.json:
        out = tc.to_dict()
        out["verified"] = threshold.verify_classification(g, tc)
        print(json.dumps(out))
    else:
        print(tc.summary())
    return 0


def cmd_symmetrize(args) -> int:
    g = read_graph(args.input, args.format)
    A = args.set if args.set is not None else list(range(g.n))
    res = zykov.symmetrize_trace(g, A, args.mode)
    if args.json:
        print(json.dumps({"n": g.n, "edges_before": g.edge_count, "edges_after": res.graph.edge_count,
                          "merges": res.merges, "mode": res.mode,
                          "trace": [list(t) for t in res.trace],
                          "graph": res.graph.to_edge_list_text()}))
        if args.out:
            write_graph(res.graph, args.out, args.graph_format)
    else:
        if args.out:
            write_graph(res.graph, args.out, args.graph_format)
        else:
            sys.stdout.write(res.graph.to_edge_list_text())
        print(f"# merges={res.merges} edges {g.edge_count} -> {res.graph.edge_count}", file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    s = args.statement
    w = args.workers
    if args.n_max is None:
        args.n_max = 9 if s == "zykov" else 5
    if s == "lemma-basic":
        if args.t is None:
            raise UsageError("verify lemma-basic needs --t")
        rep = oracle.verify_lemma_basic(args.n_max, args.r, args.t, workers=w)
    elif s == "lemma-xyz":
        rep = oracle.verify_lemma_xyz(args.n_max, args.r, workers=w)
    elif s == "aes":
        corpus = None
        if args.corpus:
            corpus = list(read_graph6_stream(_read_text(args.corpus).splitlines()))
        rep = oracle.verify_aes(args.n_max, args.r, workers=w, corpus=corpus)
    elif s == "zykov":
        modes = zykov.MODES if args.mode == "both" else (args.mode,)
        rep = oracle.verify_symmetrization(args.trials, seed=args.seed or 0, n_max=args.n_max, modes=modes, workers=w)
    elif s == "claim":
        rs = [args.r] if args.r is not None else list(range(4, 9))
        rep = oracle.verify_claim_sweep(rs, samples=args.samples, grid_step=args.grid_step, workers=w)
    else:
        rep = oracle.verify_hall(args.a_max, args.b_max, workers=w)
    if args.out:
        _write(rep.to_json() + "\n", args.out)
    print(rep.to_json() if args.json else rep.summary())
    print(f"# wall time {rep.wall_time:.2f}s, backend {rep.backend}", file=sys.stderr)
    return 0 if rep.passed else 1


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--workers", type=int, default=1, help="worker processes for sharded scans")
    common.add_argument("--seed", type=int, default=None, help="seed for randomized steps")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = _Parser(prog="chromwin", description="Edge-density bounds near the chromatic threshold.")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bounds", parents=[common], help="evaluate f1 or f2 exactly")
    b.add_argument("--theorem", type=int, choices=(1, 2), required=True)
    b.add_argument("--r", type=int, required=True)
    b.add_argument("--delta", type=_rational, required=True)
    b.set_defaults(func=cmd_bounds)

    s = sub.add_parser("sweep", parents=[common], help="tabulate a bound over a delta range (CSV)")
    s.add_argument("--theorem", type=int, choices=(1, 2), required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--from", dest="start", type=_rational, required=True)
    s.add_argument("--to", dest="stop", type=_rational, required=True)
    s.add_argument("--step", type=_rational, required=True)
    s.add_argument("--branches", action="store_true", help="add both f1 branch columns")
    s.add_argument("--out", default=None)
    s.set_defaults(func=cmd_sweep)

    c = sub.add_parser("construct", parents=[common], help="build an extremal instance and report on it")
    c.add_argument("kind", choices=constructions.KINDS)
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--delta", type=_rational, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--core", default=None, help="eg: c5, petersen or grotzsch")
    c.add_argument("--ring", type=int, default=None, help="circle core ring size (bh kinds)")
    c.add_argument("--eps", type=float, default=0.05)
    c.add_argument("--forbid", default=None, help="small graph file; report whether the build contains it")
    c.add_argument("--no-clique", action="store_true", help="skip the exact clique search")
    c.add_argument("--out", default=None, help="write the graph here")
    c.add_argument("--graph-format", choices=("edges", "graph6"), default="edges")
    c.set_defaults(func=cmd_construct)

    k = sub.add_parser("classify", parents=[common], help="chromatic threshold of a small graph")
    k.add_argument("--in", dest="input", required=True)
    k.add_argument("--format", choices=("auto", "edges", "graph6"), default="auto")
    k.set_defaults(func=cmd_classify)

    z = sub.add_parser("symmetrize", parents=[common], help="apply Z(G|A)")
    z.add_argument("--in", dest="input", required=True)
    z.add_argument("--format", choices=("auto", "edges", "graph6"), default="auto")
    z.add_argument("--set", type=_vertex_set, default=None, help="vertices of A, e.g. 1,2,5 (default all)")
    z.add_argument("--mode", choices=zykov.MODES, default="current")
    z.add_argument("--out", default=None)
    z.add_argument("--graph-format", choices=("edges", "graph6"), default="edges")
    z.set_defaults(func=cmd_symmetrize)

    v = sub.add_parser("verify", parents=[common], help="run an oracle check")
    v.add_argument("statement", choices=oracle.STATEMENTS)
    v.add_argument("--n-max", type=int, default=None, help="largest n (default 5; 9 for zykov)")
    v.add_argument("--r", type=int, default=None)
    v.add_argument("--t", type=int, default=None)
    v.add_argument("--trials", type=int, default=10_000)
    v.add_argument("--mode", choices=("current", "frozen", "both"), default="both")
    v.add_argument("--samples", type=int, default=10)
    v.add_argument("--grid-step", type=float, default=1e-3)
    v.add_argument("--a-max", type=int, default=5)
    v.add_argument("--b-max", type=int, default=5)
    v.add_argument("--corpus", default=None, help="graph6 file to check instead of the labelled enumeration")
    v.add_argument("--out", default=None, help="also write the JSON report here")
    v.set_defaults(func=cmd_verify)
    return p


_NEEDS_R = {"lemma-basic", "lemma-xyz", "aes"}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "workers", 1) < 1:
        parser.error("--workers must be at least 1")
    if args.command == "verify" and args.statement in _NEEDS_R and args.r is None:
        parser.error(f"verify {args.statement} needs --r")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"chromwin: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, GraphError, Graph6Error) as exc:
        print(f"chromwin: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
