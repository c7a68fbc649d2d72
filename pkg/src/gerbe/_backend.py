"""Kernel backend selection.

Prefers the compiled extension, falling back to the pure-Python kernels
when it is not built.  ``GERBE_BACKEND=python`` forces the fallback, which
is mainly useful for benchmarking and debugging.
"""

import os

_forced = os.environ.get("GERBE_BACKEND", "").lower()

if _forced == "python":
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _speedups as _impl

        BACKEND = "c"
    except ImportError:
        if _forced == "c":
            raise
        from . import _kernels_py as _impl

        BACKEND = "python"

signed_stabilizer = _impl.signed_stabilizer
naive_signed_elements = _impl.naive_signed_elements
linking_check = _impl.linking_check
linking_sweep = _impl.linking_sweep


def backend_name() -> str:
    return BACKEND
