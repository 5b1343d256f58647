"""Numeric backend selection.

Hot kernels ship twice: a numba @njit build and a pure-numpy fallback with
identical signatures and semantics. ``MIMICARM_BACKEND=numpy`` forces the
fallback, ``=numba`` requires numba (raises if missing); unset picks numba
when importable.
"""
from __future__ import annotations

import os
import warnings

ENV_VAR = "MIMICARM_BACKEND"
_VALID = ("numba", "numpy")


def _numba_available() -> bool:
    try:
        import numba  # noqa: F401
        return True
    except ImportError:
        return False


def active_backend() -> str:
    choice = os.environ.get(ENV_VAR, "").strip().lower()
    if choice and choice not in _VALID:
        raise ValueError(f"{ENV_VAR} must be one of {_VALID}, got {choice!r}")
    if choice == "numba":
        if not _numba_available():
            raise RuntimeError(f"{ENV_VAR}=numba but numba is not importable")
        return "numba"
    if choice == "numpy":
        return "numpy"
    if _numba_available():
        return "numba"
    warnings.warn("numba not importable; falling back to pure-numpy kernels")
    return "numpy"


def get_kernels(backend: str | None = None):
    """Return the kernel module for ``backend`` (default: active_backend())."""
    name = backend or active_backend()
    if name == "numba":
        from .kernels import numba_impl
        return numba_impl
    from .kernels import numpy_impl
    return numpy_impl
