"""Backend selection for the family-scan kernels.

The compiled extension is used when it imports; otherwise the numpy
reference implementation.  Set ``INELLIPSE_PURE_PYTHON=1`` to force the
fallback.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _pykernels


def _load() -> tuple[ModuleType, str]:
    if os.environ.get("INELLIPSE_PURE_PYTHON", "").strip() not in ("", "0"):
        return _pykernels, "python"
    try:
        from . import _ckernels
    except ImportError:
        return _pykernels, "python"
    return _ckernels, "cython"


backend, BACKEND = _load()

family_foci = backend.family_foci
family_area = backend.family_area
log_area_slope = backend.log_area_slope
max_area_r = backend.max_area_r


def available_backends() -> dict[str, ModuleType]:
    found = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        found["cython"] = _ckernels
    return found
