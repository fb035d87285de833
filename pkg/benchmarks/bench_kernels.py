"""Time the compiled kernels against the pure-Python fallback on identical workloads.

    python benchmarks/bench_kernels.py [--repeat 3] [--quick]

Each workload is run on both backends; results must agree and the speed-up is printed.
"""

from __future__ import annotations

import argparse
import time

from chromwin import kernels
from chromwin.graph import pair_list


def _workloads(quick: bool):
    n6 = 1 << len(pair_list(6))
    n7 = 1 << len(pair_list(7))
    span7 = n7 // (64 if quick else 8)
    return [
        ("lemma-basic n=6 r=4 t=3", "scan_lemma_basic", (6, 4, 3, 0, n6 // (4 if quick else 1))),
        ("lemma-xyz n=5 r=5", "scan_lemma_xyz", (5, 5, 0, 1 << 10)),
        ("aes n=7 r=3 (slice)", "scan_aes", (7, 3, 0, span7)),
        ("hall 4x4", "scan_hall", (4, 4, 0, 1 << 16)),
        ("hall 4x5 (slice)", "scan_hall", (4, 5, 0, 1 << (16 if quick else 18))),
    ]


def _time(fn, args, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller slices")
    args = ap.parse_args(argv)
    if not kernels.compiled_available():
        print("compiled kernels are not built; only the fallback is available")
        return 1
    py, cy = kernels.backend_module("python"), kernels.backend_module("cython")
    print(f"{'workload':28s} {'python s':>10s} {'cython s':>10s} {'speed-up':>9s}")
    for name, fn, wargs in _workloads(args.quick):
        tp, op = _time(getattr(py, fn), wargs, 1)
        tc, oc = _time(getattr(cy, fn), wargs, args.repeat)
        if op != oc:
            print(f"{name}: backends disagree")
            return 1
        print(f"{name:28s} {tp:10.3f} {tc:10.4f} {tp / tc:8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
