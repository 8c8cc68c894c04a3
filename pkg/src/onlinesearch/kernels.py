"""Backend selection for the exhaustive tally loop.

The compiled extension is preferred when it imported cleanly; otherwise
the pure-Python fallback takes over with identical semantics.  Setting
``ONLINESEARCH_PURE=1`` forces the fallback (used by the benchmark and by
tests that pin a backend).
"""

from __future__ import annotations

import os

if os.environ.get("ONLINESEARCH_PURE", "") not in ("", "0"):
    from . import _pykernels as _backend
else:
    try:
        from . import _kernels as _backend  # type: ignore[no-redef]
    except ImportError:  # pragma: no cover - depends on the build environment
        from . import _pykernels as _backend

count_outputs = _backend.count_outputs


def backend_name() -> str:
    """Which tally implementation is active: ``compiled`` or ``pure``."""
    return "compiled" if _backend.__name__.endswith("._kernels") else "pure"
