"""Benchmark the compiled kernels against the pure-Python fallback.

Usage:
    python3 benchmarks/bench_kernels.py [--full]

Times the Jacobi eigensolver on random symmetric matrices and the exhaustive
labeled-graph scan on small vertex counts, once per backend, and prints the
speedup. ``--full`` adds the larger scan sizes (slow in pure Python).
"""

import argparse
import time

import numpy as np

from qspectral.kernels import pykernels

try:
    from qspectral.kernels import _ckernels
except ImportError:
    _ckernels = None


def time_call(fn, *args, repeats=3, **kwargs):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args, **kwargs)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_jacobi(backend, sizes, rng):
    rows = []
    for n in sizes:
        m = rng.standard_normal((n, n))
        m = 0.5 * (m + m.T)
        rows.append((f"jacobi n={n}", time_call(backend.jacobi_eigenvalues, m)))
    return rows


def bench_scans(backend, cases):
    rows = []
    for label, kwargs in cases:
        rows.append((label, time_call(backend.scan_extremal, repeats=1, **kwargs)))
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--full", action="store_true",
                        help="include the larger scans (minutes in pure Python)")
    args = parser.parse_args()

    if _ckernels is None:
        raise SystemExit("compiled kernels are not importable; build the package first")

    jacobi_sizes = (10, 20, 40, 80)
    scan_cases = [
        ("scan bipartite n=5", dict(n=5, mode="bipartite", alphas=[0.5], directions=[1])),
        ("scan connectivity n=5 k=1",
         dict(n=5, mode="connectivity", alphas=[1.0], directions=[1], k=1)),
        ("scan bipartite n=6", dict(n=6, mode="bipartite", alphas=[0.5], directions=[1])),
    ]
    if args.full:
        scan_cases.append(
            ("scan connectivity n=6 k=1",
             dict(n=6, mode="connectivity", alphas=[1.0], directions=[1], k=1))
        )

    pure_rows = bench_jacobi(pykernels, jacobi_sizes, np.random.default_rng(7))
    fast_rows = bench_jacobi(_ckernels, jacobi_sizes, np.random.default_rng(7))
    pure_rows += bench_scans(pykernels, scan_cases)
    fast_rows += bench_scans(_ckernels, scan_cases)

    width = max(len(label) for label, _ in pure_rows)
    print(f"{'workload':<{width}}  {'pure':>10}  {'compiled':>10}  {'speedup':>8}")
    for (label, t_pure), (_, t_fast) in zip(pure_rows, fast_rows):
        print(f"{label:<{width}}  {t_pure:>9.4f}s  {t_fast:>9.4f}s  {t_pure / t_fast:>7.1f}x")


if __name__ == "__main__":
    main()
