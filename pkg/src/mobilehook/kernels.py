"""Backend selection for the enumeration kernels.

The compiled extension is used when importable; set ``MOBILEHOOK_PURE=1``
to force the pure-Python fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("MOBILEHOOK_PURE", "") not in ("", "0"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
        BACKEND = "compiled"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

extension_histograms = _impl.extension_histograms
ppartition_counts = _impl.ppartition_counts
