"""Kernel backend selection.

Hot polynomial loops (convolution and long division over GF(2^w)) have two
interchangeable implementations: a numba @njit backend and a pure
numpy/bigint fallback. Selection happens once at import time via the
environment variable GEBR_KERNELS:

    GEBR_KERNELS=numba   JIT kernels (default; falls back if numba missing)
    GEBR_KERNELS=numpy   pure numpy/bigint path

Both backends implement the same four functions with identical contracts;
tests assert bit-for-bit agreement.
"""

import os

_choice = os.environ.get("GEBR_KERNELS", "numba").strip().lower()
if _choice not in ("numba", "numpy"):
    raise ValueError(f"GEBR_KERNELS must be 'numba' or 'numpy', got {_choice!r}")

if _choice == "numba":
    try:
        from . import _numba_backend as _impl
    except ImportError:
        from . import _numpy_backend as _impl
else:
    from . import _numpy_backend as _impl

BACKEND = _impl.NAME
poly_mul_full = _impl.poly_mul_full
poly_divmod = _impl.poly_divmod
gf2_mul_full = _impl.gf2_mul_full
gf2_divmod = _impl.gf2_divmod


def warmup():
    """Run each kernel once on tiny inputs (absorbs JIT compilation cost)."""
    import numpy as np

    mul2 = np.array([[0, 0], [0, 1]], dtype=np.uint8)
    a = np.array([1, 1], dtype=np.uint8)
    b = np.array([1, 0, 1], dtype=np.uint8)
    poly_mul_full(a, a, mul2)
    poly_divmod(b, a, mul2, 1)
    gf2_mul_full(a, a)
    gf2_divmod(b, a)
