"""Kernel selection: compiled extension when available, pure NumPy otherwise.

Set HULLPROBE_PURE_PYTHON=1 to force the fallback (used by the parity tests
and the benchmark).
"""

from __future__ import annotations

import os

if os.environ.get("HULLPROBE_PURE_PYTHON"):
    from . import _simplex_py as _kernel
else:
    try:
        from . import _simplex as _kernel  # type: ignore[no-redef]
    except ImportError:
        from . import _simplex_py as _kernel  # type: ignore[no-redef]

phase1 = _kernel.phase1
BACKEND: str = _kernel.BACKEND
