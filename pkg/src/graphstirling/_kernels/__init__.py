"""Hot loops, compiled when possible.

The Cython build of :mod:`._ckernels` is preferred; if it is missing (or
``GRAPHSTIRLING_PURE_PYTHON`` is set to a non-empty value other than ``0``)
the pure-Python twins in :mod:`._pykernels` are used instead.  Both expose
the same functions and return identical results.
"""

import os

from . import _pykernels

_force_pure = os.environ.get("GRAPHSTIRLING_PURE_PYTHON", "") not in ("", "0")

try:
    if _force_pure:
        raise ImportError("pure-python kernels requested")
    from . import _ckernels as _impl

    BACKEND = "cython"
except ImportError:
    _impl = _pykernels
    BACKEND = "python"

count_independent_partitions = _impl.count_independent_partitions

__all__ = ["BACKEND", "count_independent_partitions"]
