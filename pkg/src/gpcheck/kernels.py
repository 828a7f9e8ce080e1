"""Pick the compiled kernels when available, else the pure-Python ones.

Set ``GPCHECK_PURE_PYTHON=1`` to force the fallback.  The compiled code
packs letter sets into 64-bit words, so larger alphabets always use the
fallback.
"""

from __future__ import annotations

import os

from . import _kernels as _py

_c = None
if os.environ.get("GPCHECK_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _c  # type: ignore[no-redef]
    except ImportError:  # extension not built
        _c = None

BACKEND = "cython" if _c is not None else "python"
MAX_COMPILED_LETTERS = 64


def boundary_count(opp) -> int:
    if _c is not None:
        return _c.boundary_count(opp)
    return _py.boundary_count(opp)


def vii_scan(tables):
    if _c is not None and tables.nbits <= MAX_COMPILED_LETTERS:
        return _c.vii_scan(tables)
    return _py.vii_scan(tables)
