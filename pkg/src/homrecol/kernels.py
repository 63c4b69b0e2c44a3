"""Kernel selection: compiled extension when available, pure Python otherwise.

Set HOMRECOL_PURE=1 to force the fallback (used by tests and the benchmark).
"""

from __future__ import annotations

import os

from ._fallback import BFS_BUDGET, BFS_EXHAUSTED, BFS_FOUND

if os.environ.get("HOMRECOL_PURE"):
    from . import _fallback as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _fallback as _impl

BACKEND: str = _impl.BACKEND
reduce_sequence = _impl.reduce_sequence
hom_bfs = _impl.hom_bfs

__all__ = [
    "BACKEND",
    "BFS_BUDGET",
    "BFS_EXHAUSTED",
    "BFS_FOUND",
    "hom_bfs",
    "reduce_sequence",
]
