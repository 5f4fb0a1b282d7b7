"""Backend selection for the rainbow-tree kernel.

The compiled extension is used when it was built and ``RAINBOW3_PURE`` is not
set; otherwise the pure-Python implementation is used.  Both expose the same
``RainbowChecker`` class.
"""

from __future__ import annotations

import os
from contextlib import contextmanager

from . import _pykernel

PyRainbowChecker = _pykernel.RainbowChecker

try:
    if os.environ.get("RAINBOW3_PURE"):
        raise ImportError("pure backend requested")
    from ._ckernel import RainbowChecker as CRainbowChecker
except ImportError:
    CRainbowChecker = None

MAX_COMPILED_PALETTE = 64
BACKEND = "cython" if CRainbowChecker is not None else "python"
_active = BACKEND


def available() -> list[str]:
    return ["python"] + (["cython"] if CRainbowChecker is not None else [])


@contextmanager
def backend(name: str):
    """Temporarily route all checks through ``"python"`` or ``"cython"``."""
    global _active
    if name not in available():
        raise ValueError(f"backend {name!r} not available")
    prev, _active = _active, name
    try:
        yield
    finally:
        _active = prev


def make_checker(n, edges, palette=0):
    """Checker for a graph; falls back to Python above 64 colors."""
    if _active == "cython" and palette <= MAX_COMPILED_PALETTE:
        return CRainbowChecker(n, list(edges))
    return PyRainbowChecker(n, list(edges))
