"""Import-time selection of the evaluation kernels.

The compiled Cython extension is used when present; otherwise the
numpy fallback takes over.  Set WSBESSEL_PURE=1 to force the fallback
(used by the backend-equivalence tests and the benchmark).
"""

import os

_force_pure = os.environ.get("WSBESSEL_PURE", "").strip().lower() in {"1", "true", "yes"}

if _force_pure:
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "python"

sph_jl_scalar = _impl.sph_jl_scalar
sph_jl_grid = _impl.sph_jl_grid
cells_single = _impl.cells_single
cells_two = _impl.cells_two
cells_three = _impl.cells_three


def get_backend() -> str:
    """Name of the active kernel backend: 'cython' or 'python'."""
    return BACKEND
