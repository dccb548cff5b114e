"""Time the numba and numpy batch S/T kernels on random SL(2,Z) matrices.

    python benchmarks/bench_sl2z_batch.py --count 200000 --length 12
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from fuchsdecomp import accel


def random_sl2z(count: int, length: int, seed: int) -> np.ndarray:
    """Products T^n_k S ... S T^n_1 with |n_j| <= 4, vectorised over rows."""
    rng = np.random.default_rng(seed)
    a = np.ones(count, dtype=np.int64)
    b = np.zeros(count, dtype=np.int64)
    c = np.zeros(count, dtype=np.int64)
    d = np.ones(count, dtype=np.int64)
    for _ in range(length):
        n = rng.integers(-4, 5, size=count)
        # left-multiply by S then T^n
        a, b, c, d = -c, -d, a, b
        a, b = a + n * c, b + n * d
    return np.stack([a, b, c, d], axis=1)


def timed(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=100_000)
    ap.add_argument("--length", type=int, default=10)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    mats = random_sl2z(args.count, args.length, args.seed)
    if np.abs(mats).max() >= accel.ENTRY_LIMIT:
        raise SystemExit("entries too large; lower --length")
    backends = ["numpy"] + (["numba"] if accel.HAVE_NUMBA else [])
    results = {}
    for name in backends:
        accel.st_decompose_batch(mats[:10], backend=name)  # warm up / compile
        results[name] = accel.st_decompose_batch(mats, max_len=4 * args.length + 8, backend=name)
        t = timed(lambda: accel.st_decompose_batch(mats, max_len=4 * args.length + 8,
                                                   backend=name), args.repeat)
        print(f"{name:6s} {args.count:>9d} matrices  {t * 1e3:9.2f} ms  "
              f"{args.count / t / 1e6:7.2f} M/s")
    if len(results) == 2:
        same = all(np.array_equal(x, y) for x, y in zip(results["numpy"], results["numba"]))
        print("backends agree:", same)
    else:
        print("numba unavailable or disabled; numpy only")


if __name__ == "__main__":
    main()
