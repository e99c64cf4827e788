#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure numpy/bigint fallback.

Times the two hot primitives (full multiplication and long division) at
several polynomial sizes for w = 1 and w = 8, then an end-to-end encode
throughput figure for each backend. Run:

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from gebr._kernels import _numba_backend, _numpy_backend
from gebr.field import gf


def _time(fn, *args, repeat: int, number: int = 50) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for _ in range(number):
            fn(*args)
        best = min(best, (time.perf_counter() - t0) / number)
    return best


def bench_kernels(repeat: int):
    rng = np.random.default_rng(0)
    backends = [("numba", _numba_backend), ("numpy", _numpy_backend)]
    print(f"{'op':<22}{'size':>6}{'w':>3}" + "".join(f"{n:>12}" for n, _ in backends) + f"{'speedup':>10}")
    for w in (1, 8):
        k = gf(w)
        for size in (63, 255, 1023):
            a = rng.integers(0, k.order, size).astype(np.uint8)
            b = rng.integers(0, k.order, size).astype(np.uint8)
            a[-1] = b[-1] = 1
            rows = {}
            for name, mod in backends:
                if w == 1:
                    mul_t = _time(mod.gf2_mul_full, a, b, repeat=repeat)
                    div_t = _time(mod.gf2_divmod, np.concatenate([a, a]), b, repeat=repeat)
                else:
                    mul_t = _time(mod.poly_mul_full, a, b, k.mul_table, repeat=repeat)
                    div_t = _time(
                        mod.poly_divmod, np.concatenate([a, a]), b, k.mul_table, 1,
                        repeat=repeat,
                    )
                rows[name] = (mul_t, div_t)
            for op_idx, op in enumerate(("mul_full", "divmod")):
                times = [rows[name][op_idx] for name, _ in backends]
                cells = "".join(f"{t * 1e6:>10.1f}us" for t in times)
                print(f"{op:<22}{size:>6}{w:>3}{cells}{times[1] / times[0]:>9.1f}x")


def bench_encode(repeat: int):
    import os
    import subprocess
    import sys

    print("\nend-to-end encode throughput (GEBR p=5 tau=25 k=16 r=4, w=1):")
    sys.stdout.flush()
    code = r"""
import time, numpy as np
from gebr import derive_params, encode
from gebr._kernels import BACKEND, warmup
warmup()
params = derive_params(5, 25, 16, 4, w=1)
rng = np.random.default_rng(0)
chunks = [rng.integers(0, 2, (params.alpha, params.k)).astype(np.uint8) for _ in range(32)]
encode(chunks[0], params, with_verdict=False)
t0 = time.perf_counter()
for info in chunks:
    encode(info, params, with_verdict=False)
dt = time.perf_counter() - t0
nsym = 32 * params.alpha * params.k
print(f"  {BACKEND:<6} {nsym / dt / 1e6:8.2f} Msym/s  ({dt * 1e3:.0f} ms for {nsym} symbols)")
"""
    for backend in ("numba", "numpy"):
        env = dict(os.environ, GEBR_KERNELS=backend)
        subprocess.run([sys.executable, "-c", code], env=env, check=True)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    # absorb JIT compilation before timing
    _numba_backend.gf2_mul_full(np.ones(4, np.uint8), np.ones(4, np.uint8))
    _numba_backend.gf2_divmod(np.ones(8, np.uint8), np.ones(4, np.uint8))
    t = gf(8).mul_table
    _numba_backend.poly_mul_full(np.ones(4, np.uint8), np.ones(4, np.uint8), t)
    _numba_backend.poly_divmod(np.ones(8, np.uint8), np.ones(4, np.uint8), t, 1)
    bench_kernels(args.repeat)
    bench_encode(args.repeat)


if __name__ == "__main__":
    main()
