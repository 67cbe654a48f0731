"""Numba switch for the hot kernels.

Set ``JRAINBOW_DISABLE_NUMBA=1`` to run the pure Python / numpy fallback
paths instead of the compiled ones.
"""
import os

_FALSY = {"", "0", "false", "no", "off"}


def _env_flag(name: str) -> bool:
    return os.environ.get(name, "").strip().lower() not in _FALSY


try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

USE_NUMBA = numba is not None and not _env_flag("JRAINBOW_DISABLE_NUMBA")


def njit(func):
    """Compile ``func`` with numba when enabled, else return it unchanged.

    The undecorated function is always reachable as ``func.py_func`` so tests
    and benchmarks can exercise both paths in one process.
    """
    if not USE_NUMBA:
        func.py_func = func
        return func
    return numba.njit(cache=True, nogil=True)(func)
