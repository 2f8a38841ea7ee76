"""Runtime switch between the numba kernels and the pure-numpy fallback.

Set ``LOWDIN_RT_DISABLE_JIT=1`` before import to force the numpy path.
The switch is read once; flipping it later has no effect on already
imported modules.
"""
import os

_FALSY = {"", "0", "false", "no", "off"}


def _env_flag(name):
    return os.environ.get(name, "").strip().lower() not in _FALSY


try:
    import numba  # noqa: F401

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

USE_JIT = HAVE_NUMBA and not _env_flag("LOWDIN_RT_DISABLE_JIT")
JIT_CACHE = not _env_flag("LOWDIN_RT_NO_JIT_CACHE")


def backend():
    return "numba" if USE_JIT else "numpy"
