"""Kernel backend selection.

Imports the compiled Cython kernels when available, otherwise the
pure-Python fallback.  Set STARKIT_BACKEND=py (or =c) to force a choice;
forcing ``c`` raises if the extension was not built.
"""

import os

_choice = os.environ.get("STARKIT_BACKEND", "").lower()

if _choice in ("py", "python", "pure"):
    from . import py_ops as _impl
    BACKEND = "python"
elif _choice in ("c", "cy", "cython", "compiled"):
    from . import cy_ops as _impl  # type: ignore[no-redef]
    BACKEND = "cython"
else:
    try:
        from . import cy_ops as _impl  # type: ignore[no-redef]
        BACKEND = "cython"
    except ImportError:
        from . import py_ops as _impl
        BACKEND = "python"

CZERO = _impl.CZERO
CONE = _impl.CONE
qnorm = _impl.qnorm
cadd = _impl.cadd
csub = _impl.csub
cneg = _impl.cneg
cmul = _impl.cmul
madd = _impl.madd
msub = _impl.msub
mneg = _impl.mneg
mscale = _impl.mscale
mmul = _impl.mmul
maddmul = _impl.maddmul
mdiff = _impl.mdiff
