"""Compare the compiled kernels with the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Prints one line per kernel with the median wall time of each backend and the
speedup. Inputs mirror the shapes seen in training (48x48 images, 32 channels,
6 slots).
"""
import argparse
import time

import numpy as np

from slottta import _kernels_py

try:
    from slottta import _kernels as compiled
except ImportError:
    compiled = None


def median_time(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return float(np.median(times))


def cases():
    rng = np.random.default_rng(0)
    x = rng.random((16, 48, 48, 32), dtype=np.float32)
    cols = rng.random((16 * 48 * 48, 5 * 5 * 32), dtype=np.float32)
    costs = [rng.random((5, 6)) for _ in range(200)]
    tied = [rng.integers(0, 3, (5, 6)).astype(float) for _ in range(200)]
    a, b = rng.integers(0, 6, 2304), rng.integers(0, 6, 2304)
    return {
        "im2col 16x48x48x32 k5": lambda m: m.im2col(x, 5),
        "col2im 16x48x48x32 k5": lambda m: m.col2im(cols, 16, 48, 48, 32, 5),
        "hungarian_lex 200x(5x6)": lambda m: [m.hungarian_lex(c) for c in costs],
        "hungarian_lex ties 200x(5x6)": lambda m: [m.hungarian_lex(c) for c in tied],
        "contingency 2304": lambda m: m.contingency(a, b, 6, 6),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=7)
    args = ap.parse_args()
    if compiled is None:
        print("compiled extension not built; only the fallback is available")
    print(f"{'kernel':<30}{'python [ms]':>14}{'cython [ms]':>14}{'speedup':>10}")
    for name, fn in cases().items():
        tp = median_time(lambda: fn(_kernels_py), args.repeat)
        if compiled is None:
            print(f"{name:<30}{tp * 1e3:>14.2f}{'-':>14}{'-':>10}")
            continue
        tc = median_time(lambda: fn(compiled), args.repeat)
        print(f"{name:<30}{tp * 1e3:>14.2f}{tc * 1e3:>14.2f}{tp / tc:>9.1f}x")


if __name__ == "__main__":
    main()
