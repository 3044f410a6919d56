"""Kernel selection: compiled extension when available, else pure Python.

Set SEPDECOMP_PURE_PYTHON=1 to force the fallback.  The compiled kernels
only handle n <= 62 (single-word bitmasks); callers with larger graphs are
routed to the pure implementation, which uses Python big ints.
"""

import os

from . import _pykernels

_COMPILED_MAX_N = 62

try:
    if os.environ.get("SEPDECOMP_PURE_PYTHON") == "1":
        raise ImportError("pure python forced")
    from . import _ckernels  # type: ignore[attr-defined]

    IMPLEMENTATION = "compiled"
except ImportError:
    _ckernels = None
    IMPLEMENTATION = "python"


def _pick(n):
    if _ckernels is not None and n <= _COMPILED_MAX_N:
        return _ckernels
    return _pykernels


def min_balanced_separation(n, adj_masks, max_order):
    return _pick(n).min_balanced_separation(n, adj_masks, max_order)


def min_w_balanced_separation(n, adj_masks, w_mask, max_order):
    return _pick(n).min_w_balanced_separation(n, adj_masks, w_mask, max_order)


def separation_number(n, adj_masks):
    return _pick(n).separation_number(n, adj_masks)


_COMPILED_TW_MAX_N = 28  # compiled treewidth allocates 2^n-byte tables


def treewidth(n, adj_masks):
    impl = _pick(n)
    if impl is _ckernels and n > _COMPILED_TW_MAX_N:
        impl = _pykernels
    return impl.treewidth(n, adj_masks)
