"""Backend selection for the exact integer kernels.

The compiled extension is preferred when importable; the pure-Python
module is the fallback and the reference.  Setting POWSPEC_PURE=1 forces
the pure backend, which is occasionally useful for debugging and for the
benchmark baseline.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("POWSPEC_PURE", "0") not in ("", "0"):
    _impl = _kernels_py
    BACKEND = "pure-python"
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "pure-python"

det_bareiss = _impl.det_bareiss
charpoly_leverrier = _impl.charpoly_leverrier


def available_backends() -> dict:
    """Every importable backend module keyed by name (for benchmarks/tests)."""
    out = {"pure-python": _kernels_py}
    try:
        from . import _kernels_cy

        out["compiled"] = _kernels_cy
    except ImportError:
        pass
    return out
