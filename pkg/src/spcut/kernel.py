"""Backend selection for the reduction kernel.

The compiled ``_ckernel`` is used when it imports and the weights fit in
int64 with headroom; otherwise the pure-Python kernel runs on exact Python
integers. Set ``SPCUT_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _pykernel

INT64_SAFE = 1 << 62

try:
    if os.environ.get("SPCUT_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _ckernel
except ImportError:
    _ckernel = None

BACKEND = "cython" if _ckernel is not None else "python"


def available_backends() -> list[str]:
    return ["python"] + (["cython"] if _ckernel is not None else [])


def get_backend(name: str | None = None):
    if name is None:
        name = BACKEND
    if name == "cython":
        if _ckernel is None:
            raise RuntimeError("compiled kernel is not built")
        return _ckernel
    if name == "python":
        return _pykernel
    raise ValueError(f"unknown backend {name!r}")
