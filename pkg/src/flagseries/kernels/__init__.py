"""Dense single-variable series kernels with a compiled fast path.

The compiled extension is selected at import time when available; set
``FLAGSERIES_PURE=1`` to force the pure-Python implementation (used by the
benchmark suite to compare both).
"""

import os

if os.environ.get("FLAGSERIES_PURE") == "1":
    from ._pure import BACKEND, addmul_shifted, inv_trunc, mul_trunc
else:
    try:
        from ._speedups import BACKEND, addmul_shifted, inv_trunc, mul_trunc
    except ImportError:
        from ._pure import BACKEND, addmul_shifted, inv_trunc, mul_trunc

__all__ = ["BACKEND", "addmul_shifted", "inv_trunc", "mul_trunc"]
