"""Compare the compiled kernels against the pure-Python fallback.

Both backends implement identical algorithms, so the values must agree
bit for bit; the point of the extension is speed.  Run directly:

    python benchmarks/bench_kernels.py
"""

import math
import time

import ringcorr._kernels_py as py_impl

try:
    import ringcorr._kernels_cy as cy_impl
except ImportError:
    cy_impl = None

_CASES = [
    ("direct_sum", "alpha=2, z=1", lambda m: m.direct_sum(2.0, 1.0, 0.0, 1e-12, 10**7)),
    ("direct_sum", "alpha=0.5, z=2+0.2j", lambda m: m.direct_sum(0.5, 2.0, 0.2, 1e-12, 10**7)),
    ("poisson_sum", "alpha=0.01, z=1", lambda m: m.poisson_sum(0.01, 1.0, 0.0, 1e-12, 10**7)),
    ("poisson_sum", "alpha=2, z=3+1j", lambda m: m.poisson_sum(2.0, 3.0, 1.0, 1e-12, 10**7)),
    ("half_integer_f", "alpha=2, z=1", lambda m: m.half_integer_f(2.0, 1.0, 0.0, 1e-12, 10**7)),
    ("g_direct", "alpha=6.3, z=2+3j", lambda m: m.g_direct(6.3, 2.0, 3.0, 1e-12, 10**7)),
    ("g_poisson", "alpha=0.8, z=2+3j", lambda m: m.g_poisson(0.8, 2.0, 3.0, 1e-12, 10**7)),
]


def _time(fn, repeats):
    start = time.perf_counter()
    for _ in range(repeats):
        fn()
    return (time.perf_counter() - start) / repeats


def main():
    if cy_impl is None:
        print("compiled backend unavailable; timing the Python backend only")
    header = f"{'kernel':<16} {'case':<20} {'python':>12} {'compiled':>12} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, label, call in _CASES:
        value_py = call(py_impl)
        repeats = 2000
        t_py = _time(lambda: call(py_impl), repeats)
        if cy_impl is None:
            print(f"{name:<16} {label:<20} {t_py * 1e6:>10.2f}us {'-':>12} {'-':>8}")
            continue
        value_cy = call(cy_impl)
        if value_py[:2] != value_cy[:2]:
            raise SystemExit(
                f"backend mismatch for {name}({label}): {value_py} vs {value_cy}"
            )
        t_cy = _time(lambda: call(cy_impl), repeats)
        print(
            f"{name:<16} {label:<20} {t_py * 1e6:>10.2f}us {t_cy * 1e6:>10.2f}us "
            f"{t_py / t_cy:>7.1f}x"
        )


if __name__ == "__main__":
    main()
