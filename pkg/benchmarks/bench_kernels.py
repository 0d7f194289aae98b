"""Compare the numba and numpy paths of the integer set kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Each kernel is checked for identical output before timing.  The numba
column excludes compilation (one warm-up call per kernel).
"""
import argparse
import time

import numpy as np

from genuslab import _numba
from genuslab.dissonance import derive_constraints
from genuslab.dissonance.kernels import diff_mask, monoid_mask, sum_mask


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def cases():
    rng = np.random.default_rng(0)
    a = rng.integers(0, 5000, 2000)
    b = rng.integers(0, 5000, 2000)
    gens = np.concatenate([np.arange(150, 170), np.arange(318, 338), np.arange(486, 506)])
    yield "sum_mask 2000x2000", lambda nb: sum_mask(a, b, 0, 10000, nb)
    yield "diff_mask 2000x2000", lambda nb: diff_mask(a, b, -5000, 5000, nb)
    yield "monoid_mask 60 gens, bound 200000", lambda nb: monoid_mask(gens, 200_000, nb)
    yield "feasibility scan s<=24, n<=160", lambda nb: [r.feasible_ns for r in derive_constraints(24, 160, use_numba=nb)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not _numba.HAVE_NUMBA:
        print("numba is not installed; only the numpy path can run")
    print(f"{'kernel':40s} {'numpy s':>10s} {'numba s':>10s} {'speedup':>8s}")
    for name, fn in cases():
        ref = fn(False)
        t_np = best_of(lambda: fn(False), args.repeat)
        if _numba.HAVE_NUMBA:
            got = fn(True)
            same = all(np.array_equal(x, y) for x, y in zip(ref, got)) if isinstance(ref, list) else np.array_equal(ref, got)
            if not same:
                raise SystemExit(f"{name}: backends disagree")
            t_nb = best_of(lambda: fn(True), args.repeat)
            print(f"{name:40s} {t_np:10.4f} {t_nb:10.4f} {t_np / t_nb:7.1f}x")
        else:
            print(f"{name:40s} {t_np:10.4f} {'-':>10s} {'-':>8s}")


if __name__ == "__main__":
    main()
