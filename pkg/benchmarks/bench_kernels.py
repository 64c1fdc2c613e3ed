"""Benchmark the compiled kernels against the pure-Python (numpy) reference.

Run from the repository root:

    python3 benchmarks/bench_kernels.py

Imports both backends directly, so the CASILAMB_KERNELS override is not
needed; the compiled rows disappear if the extension is not built.
"""

import math
import time

import numpy as np

from casilamb.kernels import pyref

try:
    from casilamb.kernels import _fastkern
except ImportError:
    _fastkern = None


def timeit(fn, *args, repeat=5):
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


CASES = [
    # label, function name, args
    ("sawtooth_arr 1e6 pts", "sawtooth_arr", (np.linspace(0.0, 1000.0, 1_000_000),)),
    ("damped series eps=1e-6", "damped_sine_series", (0.3, 1e-6, 1e-13, 10**8)),
    ("panels: vacuum weight, 60k", "spectral_panel_sum",
     (0, 60_000, 0.5, 0.0, 0.0, 2.0, 0.0, 1e-4, 0, 1e-12)),
    ("panels: IR weight, 600k", "spectral_panel_sum",
     (0, 600_000, 1.0, 1.0, 10.0, -1.0, 10.0, 1e-5, 0, 1e-12)),
]


def main():
    backends = [("python", pyref)]
    if _fastkern is not None:
        backends.append(("compiled", _fastkern))

    print(f"{'case':32s}" + "".join(f"{name:>14s}" for name, _ in backends) + f"{'speedup':>10s}")
    for label, fn_name, args in CASES:
        times = []
        values = []
        for _, mod in backends:
            t, out = timeit(getattr(mod, fn_name), *args)
            times.append(t)
            values.append(out)
        if len(values) == 2 and fn_name == "spectral_panel_sum":
            # summation order differs between backends, and the vacuum-weight
            # panel sum cancels ~9 decades, so agreement is condition-limited
            a, b = values[0][0], values[1][0]
            scale = max(abs(a), abs(b), 1e-300)
            assert abs(a - b) / scale < 1e-6, (label, a, b)
        row = f"{label:32s}" + "".join(f"{t * 1e3:12.2f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
