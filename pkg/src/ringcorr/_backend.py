"""Select the kernel backend once at import.

The compiled extension is preferred; RINGCORR_BACKEND=python or =compiled
forces one side (the latter raises if the extension is missing).
"""

import os

_forced = os.environ.get("RINGCORR_BACKEND")

if _forced == "python":
    from ringcorr import _kernels_py as impl

    name = "python"
elif _forced == "compiled":
    from ringcorr import _kernels_cy as impl

    name = "compiled"
elif _forced:
    raise ValueError(f"unknown RINGCORR_BACKEND {_forced!r}; use 'python' or 'compiled'")
else:
    try:
        from ringcorr import _kernels_cy as impl

        name = "compiled"
    except ImportError:
        from ringcorr import _kernels_py as impl

        name = "python"
