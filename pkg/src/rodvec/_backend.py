"""Kernel backend selection.

The compiled extension is preferred when it imports; set the environment
variable ``RODVEC_PURE_PYTHON=1`` (before first import) to force the
pure-Python fallback.
"""

from __future__ import annotations

import os

if os.environ.get("RODVEC_PURE_PYTHON"):
    from rodvec import _kernels_py as kernels
else:
    try:
        from rodvec import _kernels_cy as kernels  # type: ignore[no-redef]
    except ImportError:
        from rodvec import _kernels_py as kernels  # type: ignore[no-redef]


def backend_name() -> str:
    """Name of the active kernel backend: "compiled" or "python"."""
    return kernels.BACKEND
