"""Kernel backend selection.

The compiled kernels are used when the extension is importable, unless
``KUREPA_PURE_PYTHON`` is set to a non-empty value.
"""

import os

from . import _kernels_py

if os.environ.get("KUREPA_PURE_PYTHON"):
    kernels = _kernels_py
else:
    try:
        from . import _ckernels as kernels
    except ImportError:  # extension not built
        kernels = _kernels_py

BACKEND = kernels.NAME
