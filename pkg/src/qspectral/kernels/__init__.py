"""Kernel backend selection.

The compiled extension is preferred when present; the pure-Python twin is the
fallback so the package works from a plain source checkout. Set
``QSPECTRAL_KERNELS=python`` or ``QSPECTRAL_KERNELS=c`` to force a backend
(forcing "c" raises if the extension is missing).
"""

import os

_forced = os.environ.get("QSPECTRAL_KERNELS", "").strip().lower()
if _forced not in ("", "c", "python"):
    raise ImportError(
        f"QSPECTRAL_KERNELS must be 'c' or 'python', got {_forced!r}"
    )

if _forced == "python":
    from . import pykernels as _impl

    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl

        BACKEND = "c"
    except ImportError:
        if _forced == "c":
            raise
        from . import pykernels as _impl

        BACKEND = "python"

jacobi_eigenvalues = _impl.jacobi_eigenvalues
scan_extremal = _impl.scan_extremal
MAX_SCAN_VERTICES = _impl.MAX_SCAN_VERTICES
MAX_SCAN_ALPHAS = _impl.MAX_SCAN_ALPHAS

__all__ = [
    "BACKEND",
    "MAX_SCAN_ALPHAS",
    "MAX_SCAN_VERTICES",
    "jacobi_eigenvalues",
    "scan_extremal",
]
