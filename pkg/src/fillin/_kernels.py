"""Kernel backend selection.

The compiled extension is used when it imports; ``FILLIN_PURE_PYTHON=1``
forces the pure-Python implementation (the benchmark and the backend
cross-check tests rely on this switch).
"""
import os

from . import _pykernels

if os.environ.get("FILLIN_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels

BACKEND = "cython" if _impl is not _pykernels else "python"

components = _impl.components
neighborhood = _impl.neighborhood
fill_count = _impl.fill_count
pmc_separators = _impl.pmc_separators
peo = _impl.peo
mcs_m = _impl.mcs_m
iter_bits = _pykernels.iter_bits
