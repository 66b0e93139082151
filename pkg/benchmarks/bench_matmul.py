"""Time the numba and numpy max-plus product kernels against each other.

    python benchmarks/bench_matmul.py --sizes 16 64 256 --repeat 5

Both kernels are run on the same random operands and their outputs are
compared before any timing is reported.
"""
import argparse
import time

import numpy as np

from maxplus import _kernels


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[16, 64, 128, 256])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--eps", type=float, default=0.2, help="fraction of epsilon entries")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    rng = np.random.default_rng(args.seed)
    # compile outside the timed region
    one = np.ones((1, 1), bool)
    _kernels.matmul_numba(np.zeros((1, 1), np.int64), one, np.zeros((1, 1), np.int64), one)

    print(f"{'n':>6} {'numba [ms]':>12} {'numpy [ms]':>12} {'speedup':>9}")
    for n in args.sizes:
        av = rng.integers(-1000, 1000, size=(n, n), dtype=np.int64)
        bv = rng.integers(-1000, 1000, size=(n, n), dtype=np.int64)
        af = rng.random((n, n)) >= args.eps
        bf = rng.random((n, n)) >= args.eps

        jv, jf, _ = _kernels.matmul_numba(av, af, bv, bf)
        nv, nf, _ = _kernels.matmul_numpy(av, af, bv, bf)
        if not (np.array_equal(jf, nf) and np.array_equal(jv[jf], nv[nf])):
            raise SystemExit(f"backends disagree at n={n}")

        t_jit = best_of(lambda: _kernels.matmul_numba(av, af, bv, bf), args.repeat)
        t_np = best_of(lambda: _kernels.matmul_numpy(av, af, bv, bf), args.repeat)
        print(f"{n:>6} {t_jit * 1e3:>12.3f} {t_np * 1e3:>12.3f} {t_np / t_jit:>8.1f}x")


if __name__ == "__main__":
    main()
