"""Grid-oracle kernel selection.

The compiled extension is used when it imported successfully and the
integerized payoffs fit the int64-safe bound; otherwise the pure-Python twin
(arbitrary precision) runs.  Set TWOBYTWO_PURE_KERNEL=1 to force the pure
path regardless.
"""

from __future__ import annotations

import os

from . import _gridkernel_py

if os.environ.get("TWOBYTWO_PURE_KERNEL"):
    _compiled = None
else:
    try:
        from . import _gridkernel as _compiled  # type: ignore[attr-defined]
    except ImportError:
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"


def int64_safe(n: int, h_row, h_col) -> bool:
    """True when every intermediate of the grid oracle fits in 64-bit integers."""
    peak = max(abs(v) for v in (*h_row, *h_col))
    return peak <= (1 << 60) // max(n * n, 1)


def grid_oracle(n: int, h_row, h_col, boxes):
    """Dispatch to the fastest exact implementation for these magnitudes."""
    if _compiled is not None and int64_safe(n, h_row, h_col):
        return _compiled.grid_oracle(n, h_row, h_col, boxes)
    return _gridkernel_py.grid_oracle(n, h_row, h_col, boxes)
