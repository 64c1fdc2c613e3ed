"""Hot numerical kernels with backend selection at import time.

The compiled Cython extension is preferred when present; the numpy reference
implementation is the fallback.  Set ``CASILAMB_KERNELS=py`` to force the
pure-Python backend or ``CASILAMB_KERNELS=c`` to require the compiled one
(import then fails loudly if the extension is missing).

Both backends expose the same callables with identical panel decomposition
and truncation rules; ``benchmarks/bench_kernels.py`` compares their speed.
"""

import os

_requested = os.environ.get("CASILAMB_KERNELS", "").strip().lower()

if _requested in ("py", "python", "pure"):
    from . import pyref as _impl
elif _requested in ("c", "compiled", "fast"):
    from . import _fastkern as _impl  # type: ignore[no-redef]
else:
    try:
        from . import _fastkern as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import pyref as _impl

BACKEND = _impl.BACKEND

PROFILE_GAUSSIAN = 0
PROFILE_QUARTIC = 1
PROFILE_SECH = 2
PROFILE_NONE = 3

sawtooth = _impl.sawtooth
sawtooth_arr = _impl.sawtooth_arr
damped_sine_series = _impl.damped_sine_series
profile_value = _impl.profile_value
spectral_panel_sum = _impl.spectral_panel_sum

__all__ = [
    "BACKEND",
    "PROFILE_GAUSSIAN",
    "PROFILE_NONE",
    "PROFILE_QUARTIC",
    "PROFILE_SECH",
    "damped_sine_series",
    "profile_value",
    "sawtooth",
    "sawtooth_arr",
    "spectral_panel_sum",
]
