"""Kernel dispatch: compiled extension when built, pure Python otherwise.

Set PERMTOP_PURE=1 to force the fallback. Both backends implement the
same contracts (see _kernels_py); the compiled word kernel only covers
groups of at most 128 elements, larger inputs fall through per call.
"""

from __future__ import annotations

import os
from typing import Sequence

from . import _kernels_py

if os.environ.get("PERMTOP_PURE"):
    _impl = _kernels_py
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

backend = "pure" if _impl is _kernels_py else "compiled"


def commuting_rows(flat, width: int, h) -> bytes:
    return _impl.commuting_rows(flat, width, h)


def word_inequality_masks(mul, n: int, max_vars: int) -> list[int]:
    if _impl is not _kernels_py and (n > 128 or max_vars > 8):
        return _kernels_py.word_inequality_masks(mul, n, max_vars)
    return _impl.word_inequality_masks(mul, n, max_vars)
