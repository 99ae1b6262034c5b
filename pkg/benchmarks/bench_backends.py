"""Compare the numba and pure-numpy 2F1 kernels on the grids the classifiers use.

    python3 benchmarks/bench_backends.py [--points 4096] [--repeat 5]

Both backends are imported from the same module regardless of the
ZBHYP_DISABLE_NUMBA flag, so one run times both.
"""
import argparse
import time

import numpy as np

from zbhyp import _kernels
from zbhyp.thresholds import probe_grid

CASES = [
    ("F   (a,b;a+b)", 0.5, 0.5, 1.0),
    ("F1  (a,b;a+b+1)", 0.3, 0.4, 1.7),
    ("F2  (a+1,b+1;a+b+2)", 1.3, 1.4, 2.7),
    ("non-integer excess", 0.3, 0.4, 1.25),
]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, default=4096)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    xs = probe_grid(args.points, 1e-9)
    print(f"{args.points} abscissae, best of {args.repeat}")
    if not _kernels.HAVE_NUMBA:
        print("numba not installed; timing the numpy backend only")
    print(f"{'case':24s} {'numpy [ms]':>11s} {'numba [ms]':>11s} {'speedup':>8s} {'max rel diff':>13s}")
    for name, a, b, c in CASES:
        ref, _, _ = _kernels.hyp2f1_numpy(a, b, c, xs)
        t_np = best_of(lambda: _kernels.hyp2f1_numpy(a, b, c, xs), args.repeat)
        if _kernels.HAVE_NUMBA:
            _kernels.hyp2f1_numba(a, b, c, xs[:4])  # compile outside the timing
            val, _, _ = _kernels.hyp2f1_numba(a, b, c, xs)
            t_nb = best_of(lambda: _kernels.hyp2f1_numba(a, b, c, xs), args.repeat)
            diff = np.max(np.abs(val - ref) / np.abs(ref))
            print(f"{name:24s} {1e3 * t_np:11.2f} {1e3 * t_nb:11.2f} {t_np / t_nb:8.1f} {diff:13.2e}")
        else:
            print(f"{name:24s} {1e3 * t_np:11.2f} {'-':>11s} {'-':>8s} {'-':>13s}")


if __name__ == "__main__":
    main()
