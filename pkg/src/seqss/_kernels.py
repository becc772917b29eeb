"""Kernel selection: compiled extension when built, numpy fallback otherwise.

Set ``SEQSS_KERNELS=python`` or ``=cython`` to force a choice (used by the
benchmark and the cross-check tests).
"""

import os

_choice = os.environ.get("SEQSS_KERNELS", "auto").strip().lower()

if _choice == "python":
    from . import _kernels_py as _impl
elif _choice == "cython":
    from . import _kernels_cy as _impl  # explicit request: fail loudly if unbuilt
else:
    try:
        from . import _kernels_cy as _impl
    except ImportError:
        from . import _kernels_py as _impl

KERNEL_IMPL: str = _impl.IMPL

hadamard_inplace = _impl.hadamard_inplace
cnot_inplace = _impl.cnot_inplace
flip_oracle_inplace = _impl.flip_oracle_inplace
