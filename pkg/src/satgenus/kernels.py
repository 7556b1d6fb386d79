"""Kernel selection: compiled extension if available, pure Python otherwise.

Set SATGENUS_PURE=1 in the environment to force the pure-Python kernels
(used by the benchmark and for debugging).
"""

import os

if os.environ.get("SATGENUS_PURE"):
    from . import _pykernels as _impl
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pykernels as _impl

BACKEND = _impl.BACKEND
det_int = _impl.det_int
matmul_int = _impl.matmul_int
sym_signature = _impl.sym_signature
