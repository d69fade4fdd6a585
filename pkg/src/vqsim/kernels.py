"""Backend selection for the gate application kernels.

The compiled Cython extension is preferred; the NumPy implementation is
used when the extension is missing or ``VQSIM_PURE_PYTHON`` is set in the
environment.  Both expose the same in-place interface.
"""

import os

from . import _kernels_np

if os.environ.get("VQSIM_PURE_PYTHON"):
    _impl = _kernels_np
    BACKEND = "numpy"
else:
    try:
        from . import _kernels_c as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_np
        BACKEND = "numpy"

apply_one_qubit = _impl.apply_one_qubit
apply_two_qubit = _impl.apply_two_qubit
