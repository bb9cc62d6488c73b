"""Kernel backend selection, decided once at import.

The compiled extension is preferred when it imported cleanly; the
pure-Python twin is the fallback and also serves universes wider than a
machine word.  Set ``SOFTSETS_BACKEND=pure`` or ``=compiled`` to force a
side (forcing an unavailable side fails loudly rather than silently
degrading).
"""

from __future__ import annotations

import os

from . import _kernels_py

try:
    from . import _kernels_cy
except ImportError:
    _kernels_cy = None

_WORD_BITS = 64


def _select():
    forced = os.environ.get("SOFTSETS_BACKEND")
    if forced == "pure":
        return _kernels_py
    if forced == "compiled":
        if _kernels_cy is None:
            raise RuntimeError(
                "SOFTSETS_BACKEND=compiled but the softsets._kernels_cy "
                "extension is not built"
            )
        return _kernels_cy
    if forced is not None:
        raise RuntimeError(f"unknown SOFTSETS_BACKEND value {forced!r}")
    return _kernels_cy if _kernels_cy is not None else _kernels_py


_active = _select()


def backend_name() -> str:
    return "compiled" if _active is _kernels_cy else "pure"


def kernel_for(n_objects: int):
    """Kernel module to use for a universe of ``n_objects`` objects.

    The compiled kernel packs one parameter per 64-bit word, so wider
    universes always go through the pure kernels.
    """
    if _active is _kernels_cy and n_objects <= _WORD_BITS:
        return _kernels_cy
    return _kernels_py


def use(name: str) -> None:
    """Switch the active backend; a hook for tests and benchmarks."""
    global _active
    if name == "pure":
        _active = _kernels_py
    elif name == "compiled":
        if _kernels_cy is None:
            raise RuntimeError("compiled kernels are not built")
        _active = _kernels_cy
    else:
        raise ValueError(f"unknown backend {name!r}")
