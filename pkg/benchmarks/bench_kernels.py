#!/usr/bin/env python3
"""Side-by-side timing of the numba and numpy kernel backends.

The backend is fixed at import time through BENTCODES_NO_NUMBA, so the
script re-executes itself once per backend and prints one table:

    python3 benchmarks/bench_kernels.py

Workloads are the hot paths behind the public API: span weight histograms,
fixed-weight codeword collection, pairwise block intersections, the
symmetric-difference triple scan, and the Walsh butterfly.
"""

import argparse
import json
import os
import random
import subprocess
import sys
import time

REPEATS = 3


def best_of(fn, repeats=REPEATS):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def workloads():
    import numpy as np

    from bentcodes import (
        _kernels,
        build_code,
        gold_basis_family,
        gold_trace_family,
        make_field,
        min_weight_design,
        rm1_generator,
        select_components,
    )

    _kernels.warmup()  # exclude JIT compilation from the numbers

    field10 = make_field(10, 0x46F)
    big = build_code(
        rm1_generator(field10),
        select_components(gold_basis_family(field10, i=1), [1, 2, 3]),
    )
    rng = random.Random(7)
    wide = _kernels.ints_to_rows(
        [rng.randrange(1, 1 << 64) for _ in range(20)], 64
    )
    blocks_big = min_weight_design(big).packed_blocks()

    small_code = build_code(
        rm1_generator(make_field(6)),
        select_components(gold_trace_family(make_field(6), i=1), [1]),
    )
    D = min_weight_design(small_code)
    blocks = D.packed_blocks()
    full = (1 << D.v) - 1
    allowed = _kernels.ints_to_rows(
        list(D.blocks) + [full ^ b for b in D.blocks], D.v
    )

    vec = np.array(
        [rng.randrange(-3, 4) for _ in range(1 << 20)], dtype=np.int64
    )
    mat = np.array(
        [[rng.randrange(-3, 4) for _ in range(1 << 10)] for _ in range(448)],
        dtype=np.int64,
    )

    return [
        ("weight_histogram [1024,14]",
         lambda: _kernels.weight_histogram(big.basis.words, 1024)),
        ("weight_histogram [64,20]",
         lambda: _kernels.weight_histogram(wide, 64)),
        ("words_of_weight 496 of [1024,14]",
         lambda: _kernels.words_of_weight(big.basis.words, 1024, 496)),
        ("pair intersections, 7168 blocks",
         lambda: _kernels.pairwise_intersection_histogram(blocks_big, 496)),
        ("sdp scan, 64 blocks (41664 triples)",
         lambda: _kernels.sdp_triple_scan(blocks, allowed)),
        ("fwht, one length-2^20 vector",
         lambda: _kernels.fwht_inplace(vec)),
        ("fwht_batch, 448 x 1024",
         lambda: _kernels.fwht_batch(mat)),
    ]


def run_child():
    from bentcodes import _kernels

    results = {"backend": _kernels.backend(), "times": {}}
    for name, fn in workloads():
        results["times"][name] = best_of(fn)
    print(json.dumps(results))


def run_parent():
    out = {}
    for flag in ("0", "1"):
        env = dict(os.environ, BENTCODES_NO_NUMBA=flag)
        proc = subprocess.run(
            [sys.executable, os.path.abspath(__file__), "--child"],
            env=env, capture_output=True, text=True,
        )
        if proc.returncode != 0:
            sys.stderr.write(proc.stderr)
            sys.exit(proc.returncode)
        data = json.loads(proc.stdout.strip().splitlines()[-1])
        out[data["backend"]] = data["times"]
    if set(out) != {"numba", "numpy"}:
        print("warning: numba backend unavailable, numbers below are numpy only")
    names = list(next(iter(out.values())))
    width = max(len(n) for n in names)
    header = f"{'workload':<{width}}  {'numba':>10}  {'numpy':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name in names:
        tn = out.get("numba", {}).get(name)
        tp = out.get("numpy", {}).get(name)
        ratio = f"{tp / tn:7.1f}x" if tn and tp else "       -"
        fmt = lambda t: f"{t * 1e3:9.2f}ms" if t is not None else "        -"
        print(f"{name:<{width}}  {fmt(tn)}  {fmt(tp)}  {ratio}")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args()
    if args.child:
        run_child()
    else:
        run_parent()
