"""Selects the kernel backend at import time.

The compiled extension is used when it has been built; set
``PARTBOUND_PURE_PYTHON=1`` to force the Python fallback.
"""
from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("PARTBOUND_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

BACKEND: str = _impl.BACKEND
sparsest_cut_scan = _impl.sparsest_cut_scan
min_crossing_path = _impl.min_crossing_path


def backends() -> dict:
    """All importable backends by name, for benchmarks and parity tests."""
    out = {"python": _kernels_py}
    try:
        from . import _kernels

        out["cython"] = _kernels
    except ImportError:
        pass
    return out
