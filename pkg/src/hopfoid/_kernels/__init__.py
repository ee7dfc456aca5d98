"""Kernel selection.

The compiled extension is used when it imports cleanly; setting the
environment variable ``HOPFOID_PURE=1`` forces the pure-Python kernels.
``BACKEND`` names the active implementation.
"""

import os

if os.environ.get("HOPFOID_PURE", "") not in ("", "0"):
    from . import _pykernels as K
    BACKEND = "python"
else:
    try:
        from . import _ckernels as K  # type: ignore[attr-defined]
        BACKEND = "cython"
    except ImportError:  # pragma: no cover - depends on build
        from . import _pykernels as K
        BACKEND = "python"

trim = K.trim
mul = K.mul
lincomb = K.lincomb
deriv = K.deriv
content = K.content
exact_div = K.exact_div
pseudo_divmod = K.pseudo_divmod
matvec = K.matvec
mpoly_mul = K.mpoly_mul

__all__ = ["BACKEND", "trim", "mul", "lincomb", "deriv", "content",
           "exact_div", "pseudo_divmod", "matvec", "mpoly_mul"]
