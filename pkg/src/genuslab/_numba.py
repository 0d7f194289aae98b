"""Optional numba JIT.  Set GENUSLAB_DISABLE_NUMBA=1 to force the numpy paths."""
from __future__ import annotations

import os

DISABLED = os.environ.get("GENUSLAB_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes")

try:
    from numba import njit as _njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised with numba hidden from sys.modules
    _njit = None
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and not DISABLED


def njit(*args, **kwargs):
    """numba.njit when numba is importable, otherwise a no-op decorator.

    Compiles even when GENUSLAB_DISABLE_NUMBA is set so benchmarks can still
    compare both paths; the flag only changes which path the dispatchers use.
    """
    if _njit is not None:
        return _njit(*args, **kwargs)
    if len(args) == 1 and callable(args[0]) and not kwargs:
        return args[0]

    def wrap(fn):
        return fn

    return wrap
