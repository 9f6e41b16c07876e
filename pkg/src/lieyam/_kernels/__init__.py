"""Exact elimination kernels with a compiled/pure backend switch.

The compiled extension is preferred when importable; set the environment
variable LIEYAM_FORCE_PURE=1 to force the pure-Python implementation
(used by the benchmark to compare both).
"""

import os

from . import _pure

if os.environ.get("LIEYAM_FORCE_PURE"):
    _impl = _pure
    BACKEND = "pure"
else:
    try:
        from . import _speed as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        _impl = _pure
        BACKEND = "pure"

rank_int_rows = _impl.rank_int_rows
rref_frac = _impl.rref_frac

pure = _pure
