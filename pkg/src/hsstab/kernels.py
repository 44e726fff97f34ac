"""Backend selection for the subset kernels.

The compiled ``_ckernels`` extension is used when it was built; otherwise the
numpy module ``_pykernels`` is used.  Both expose the same functions, and
``set_backend`` switches between them (used by the benchmark and by the
backend-agreement tests).  Setting ``HSSTAB_BACKEND=python`` in the
environment forces the numpy backend at import.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_NAMES = (
    "find_nonassociative",
    "set_product",
    "omega",
    "closure",
    "hs_saturate",
    "hs2_violation",
    "product_escape",
    "conjugated_squares",
)

_active: ModuleType = _ckernels if _ckernels is not None else _pykernels
if os.environ.get("HSSTAB_BACKEND") == "python":
    _active = _pykernels


def available_backends() -> list[str]:
    return ["python"] + (["cython"] if _ckernels is not None else [])


def backend() -> str:
    return _active.BACKEND


def set_backend(name: str) -> None:
    global _active
    if name == "python":
        _active = _pykernels
    elif name == "cython":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not built; run `pip install -e .`")
        _active = _ckernels
    else:
        raise ValueError(f"unknown backend {name!r}")


def get_module(name: str) -> ModuleType:
    return {"python": _pykernels, "cython": _ckernels}[name]


def __getattr__(attr):
    if attr in _NAMES:
        return getattr(_active, attr)
    raise AttributeError(attr)
