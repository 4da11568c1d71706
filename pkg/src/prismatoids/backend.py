"""Kernel selection: compiled extension when available, pure Python otherwise.

Set PRISMATOID_KERNEL=pure or PRISMATOID_KERNEL=speedups to force a backend
(forcing "speedups" raises if the extension is missing).
"""

from __future__ import annotations

import os

from . import _fallback

_forced = os.environ.get("PRISMATOID_KERNEL", "").strip().lower()

if _forced == "pure":
    _impl = _fallback
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        if _forced in ("speedups", "cython", "fast"):
            raise ImportError(
                "PRISMATOID_KERNEL requested the compiled kernel but "
                "prismatoids._speedups is not built"
            )
        _impl = _fallback

KERNEL = _impl.NAME

gauss_jordan_adjugate = _impl.gauss_jordan_adjugate
product_table = _impl.product_table
eval_functional = _impl.eval_functional
best_ratio = _impl.best_ratio
adjacency_pairs = _impl.adjacency_pairs
bareiss_echelon = _impl.bareiss_echelon
pivot_update = _impl.pivot_update
combine_hvals = _impl.combine_hvals
best_ratio_signed = _impl.best_ratio_signed
