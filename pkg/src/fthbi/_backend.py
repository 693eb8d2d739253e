"""Kernel backend selection.

The compiled extension (``fthbi._kernels``) is preferred when importable;
otherwise the pure-Python twin takes over.  ``FTHBI_BACKEND=pure`` or
``FTHBI_BACKEND=compiled`` forces the choice; forcing the compiled backend
raises if the extension is unavailable instead of silently downgrading.
"""

import os

_requested = os.environ.get("FTHBI_BACKEND", "").strip().lower()

if _requested in ("", "compiled"):
    try:
        from . import _kernels as kernels

        BACKEND = "compiled"
    except ImportError:
        if _requested == "compiled":
            raise
        from . import _kernels_py as kernels

        BACKEND = "pure"
elif _requested in ("pure", "python"):
    from . import _kernels_py as kernels

    BACKEND = "pure"
else:
    raise ImportError(
        f"FTHBI_BACKEND={_requested!r} not recognized; use 'pure' or 'compiled'"
    )


def backend_name():
    """Name of the kernel backend selected at import: 'compiled' or 'pure'."""
    return BACKEND
