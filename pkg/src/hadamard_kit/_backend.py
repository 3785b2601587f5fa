"""Select the kernel implementation at import time.

The compiled ``_ckernels`` module is preferred. Setting
``HADAMARD_KIT_BACKEND=python`` forces the pure-Python fallback.
"""
import os

from hadamard_kit import _pykernels

python_kernels = _pykernels

try:
    from hadamard_kit import _ckernels as compiled_kernels
except ImportError:
    compiled_kernels = None

if compiled_kernels is not None and os.environ.get("HADAMARD_KIT_BACKEND", "").lower() != "python":
    kernels = compiled_kernels
    BACKEND = "compiled"
else:
    kernels = _pykernels
    BACKEND = "python"
