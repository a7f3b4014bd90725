"""Backend selection for the statevector kernels.

The compiled extension is preferred when importable; set QPREP3_PURE_PYTHON=1
to force the pure-Python fallback. `BACKEND` names the active implementation.
"""
import os

if os.environ.get("QPREP3_PURE_PYTHON"):
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernels_c as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as _impl  # type: ignore[no-redef]

        BACKEND = "python"

apply_local = _impl.apply_local
apply_cz = _impl.apply_cz
