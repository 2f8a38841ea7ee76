"""Compare the numba kernels against the pure-numpy fallback.

    python benchmarks/bench_kernels.py [--repeats 20]

Prints the best wall time per kernel and backend, and the speed-up.
"""
import argparse
import time

import numpy as np

from lowdin_rt import _kernels
from lowdin_rt.gram import random_gram
from lowdin_rt.lso import build
from lowdin_rt.sampling import haar_unitaries, random_probs


def best_of(fn, args, repeats):
    fn(*args)  # compile / warm caches
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def cases(rng):
    src = random_probs(8, rng, n=100_000)
    tgt = random_probs(8, rng, n=100_000)
    yield "pmax_rows  n=1e5 d=8", "pmax_rows", (src, tgt, 1e-12)

    g = random_gram(4, rng)
    ts = haar_unitaries(4, 20_000, rng) @ build(g).inv_sqrt_s
    yield "lowdin_distance n=2e4 d=4", "lowdin_distance", (ts, np.ascontiguousarray(g.entries))

    m = rng.standard_normal((64, 64)) + 1j * rng.standard_normal((64, 64))
    yield "offdiag_abs_sum d=64", "offdiag_abs_sum", (m,)

    grid = np.linspace(-0.999, 0.999, 1_000_000)
    yield "qubit_l1_sweep n=1e6", "qubit_l1_sweep", (3.0, grid, 1e-9)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeats", type=int, default=20)
    ap.add_argument("--seed", type=int, default=42)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)

    print(f"{'kernel':30s} {'numba [ms]':>12s} {'numpy [ms]':>12s} {'speed-up':>9s}")
    for label, name, kargs in cases(rng):
        t_jit = best_of(getattr(_kernels, f"{name}_jit"), kargs, args.repeats)
        t_np = best_of(getattr(_kernels, f"{name}_numpy"), kargs, args.repeats)
        print(f"{label:30s} {t_jit * 1e3:12.3f} {t_np * 1e3:12.3f} {t_np / t_jit:9.2f}")


if __name__ == "__main__":
    main()
