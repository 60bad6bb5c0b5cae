"""Backend selection for the polynomial inner loops.

The compiled extension ``fubini._ckernels`` is used when it was built and
imports cleanly; otherwise the pure-Python ``fubini._pykernels`` is used.
Set ``FUBINI_PURE_PYTHON=1`` to force the fallback.
"""

import os

from fubini import _pykernels

BACKEND = "python"

if os.environ.get("FUBINI_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from fubini import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pykernels
else:
    _impl = _pykernels

convolve = _impl.convolve
convolve_mod = _impl.convolve_mod
axpy = _impl.axpy
horner_mod = _impl.horner_mod

__all__ = ["BACKEND", "convolve", "convolve_mod", "axpy", "horner_mod"]
