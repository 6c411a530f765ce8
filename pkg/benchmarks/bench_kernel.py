#!/usr/bin/env python3
"""Benchmark the compiled kernel extension against the pure-Python fallback.

Micro benchmarks exercise the raw kernel routines on workloads shaped like
the package's real ones (gcd during canonical reduction, dense products,
alternating weighted Riemann sums); the end-to-end benchmark times the
n <= 30 dual-pipeline Genocchi computation in fresh subprocesses with the
backend pinned via QGENOCCHI_PURE.

Run from the repository root:  python benchmarks/bench_kernel.py
"""

import os
import random
import subprocess
import sys
import time

HERE = os.path.dirname(os.path.abspath(__file__))
SRC = os.path.join(HERE, "..", "src")
sys.path.insert(0, SRC)

from qgenocchi import _kernel_py  # noqa: E402

try:
    from qgenocchi import _kernel_c
except ImportError:
    _kernel_c = None


def binomial_power(exp):
    out = [1]
    for _ in range(exp):
        out = _kernel_py.poly_mul(out, [1, 1])
    return out


def timeit(fn, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def micro(backend):
    rng = random.Random(12345)
    dense_a = [rng.randint(-999, 999) for _ in range(49)]
    dense_b = [rng.randint(-999, 999) for _ in range(49)]
    pow18 = binomial_power(18)
    numer = _kernel_py.poly_mul(binomial_power(17), [rng.randint(-50, 50) for _ in range(20)] + [7])
    sum_coeffs = [0, 0, 0, 0, 0, 0, 1]  # xi^6

    results = {}
    results["poly_mul deg48*deg48"] = timeit(lambda: backend.poly_mul(dense_a, dense_b), 20)
    results["poly_gcd (1+q)^18 vs mixed"] = timeit(lambda: backend.poly_gcd(pow18, numer), 20)
    results["riemann sum p=5 m=5 deg6"] = timeit(
        lambda: backend.alt_weighted_int_sum(6, 1, 5 ** 5, sum_coeffs), 3)
    results["riemann modsum p=5 m=5 deg6"] = timeit(
        lambda: backend.alt_weighted_mod_sum(6, 5 ** 5, sum_coeffs, 5 ** 16), 3)
    return results


END_TO_END = (
    "from qgenocchi.genocchi import genocchi_number, genocchi_series_oracle\n"
    "ser = genocchi_series_oracle(30)\n"
    "assert all(ser[n] == genocchi_number(n) for n in range(31))\n"
)


def end_to_end(pure: bool) -> float:
    env = dict(os.environ, PYTHONPATH=SRC, QGENOCCHI_PURE="1" if pure else "0")
    best = float("inf")
    for _ in range(3):
        t0 = time.perf_counter()
        subprocess.run([sys.executable, "-c", END_TO_END], env=env, check=True)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    backends = [("python", _kernel_py)]
    if _kernel_c is not None:
        backends.append(("compiled", _kernel_c))
    else:
        print("compiled kernel not built; showing pure-Python numbers only\n")

    rows = {}
    for name, mod in backends:
        for label, seconds in micro(mod).items():
            rows.setdefault(label, {})[name] = seconds

    width = max(len(label) for label in rows) + 2
    header = f"{'micro benchmark':<{width}}" + "".join(f"{name:>12}" for name, _ in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for label, per in rows.items():
        line = f"{label:<{width}}" + "".join(f"{per[name] * 1e3:>10.2f}ms" for name, _ in backends)
        if len(backends) == 2:
            line += f"{per['python'] / per['compiled']:>9.2f}x"
        print(line)

    print("\nend-to-end: dual-pipeline Genocchi table to n=30 (fresh process)")
    t_py = end_to_end(pure=True)
    print(f"  python   {t_py * 1e3:8.1f}ms")
    if _kernel_c is not None:
        t_c = end_to_end(pure=False)
        print(f"  compiled {t_c * 1e3:8.1f}ms   speedup {t_py / t_c:.2f}x")


if __name__ == "__main__":
    main()
