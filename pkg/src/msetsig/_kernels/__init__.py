"""Hot inner loops, with backend selection at import time.

The compiled Cython module is preferred when present; otherwise the numpy
fallback is used. Setting the environment variable MSETSIG_PURE (to any
non-empty value) forces the fallback, which is useful for benchmarking and
for debugging a suspect build. Both backends produce identical results.
"""

import os

from . import _fallback

if os.environ.get("MSETSIG_PURE"):
    _impl = _fallback
    BACKEND = "python"
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        _impl = _fallback
        BACKEND = "python"

xcorr = _impl.xcorr
lowpass = _impl.lowpass


def backend_name() -> str:
    """Which kernel backend was selected at import: 'compiled' or 'python'."""
    return BACKEND
