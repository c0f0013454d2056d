"""Compare the numba and numpy kernels.

    python benchmarks/bench_kernels.py [--repeat 5] [--json out.json]

Both backends are imported from ``ctaffect._kernels`` regardless of
CT_AFFECT_JIT; numba timings exclude the first (compiling) call.
"""
import argparse
import json
import math
import time

import numpy as np

from ctaffect import _kernels


def best_of(fn, repeat):
    fn()  # warm-up / compile
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases():
    for n in (64, 1024, 16384):
        mask = np.zeros(n, dtype=np.bool_)
        mask[0] = True
        iters = int(round(math.pi / 4 * math.sqrt(n))) * 4
        yield f"grover_trace N={n} iters={iters}", "grover_trace", (mask, math.pi, math.pi, iters)
    rng = np.random.default_rng(0)
    cdf = np.cumsum(rng.dirichlet(np.ones(4)))
    for n in (10**4, 10**6):
        yield f"sample_counts n={n}", "sample_counts", (cdf, rng.random(n))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", help="write results here")
    args = ap.parse_args()

    rows = []
    print(f"{'case':40s} {'numpy [ms]':>12s} {'numba [ms]':>12s} {'speedup':>8s}")
    for label, kernel, call_args in cases():
        t_np = best_of(lambda: getattr(_kernels, f"numpy_{kernel}")(*call_args), args.repeat)
        t_nb = None
        if _kernels.HAVE_NUMBA:
            t_nb = best_of(lambda: getattr(_kernels, f"numba_{kernel}")(*call_args), args.repeat)
        speed = f"{t_np / t_nb:8.1f}" if t_nb else "     n/a"
        nb = f"{t_nb * 1e3:12.3f}" if t_nb else f"{'n/a':>12s}"
        print(f"{label:40s} {t_np * 1e3:12.3f} {nb} {speed}")
        rows.append({"case": label, "numpy_s": t_np, "numba_s": t_nb})
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2, sort_keys=True)


if __name__ == "__main__":
    main()
