"""Kernel backend selection.

The compiled extension is used when it was built; otherwise, or when the
``SADDLES_PURE_PYTHON`` environment variable is set to a non-empty value,
the pure-Python fallback is used. Both produce identical results.
"""
import os

from . import _pykernels

if os.environ.get("SADDLES_PURE_PYTHON"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels

BACKEND = _impl.BACKEND
collision_stop = _impl.collision_stop
chung_lu_block = _impl.chung_lu_block


def available_backends():
    """Map backend name to kernel module for every backend importable here."""
    found = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        found["cython"] = _ckernels
    return found
