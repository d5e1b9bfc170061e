"""Hot relation-evaluation kernels with a selectable backend.

Two implementations exist with identical semantics: a numba-compiled one
(default when numba imports cleanly) and a pure-NumPy fallback.  Set
``VAGUETIME_BACKEND=numpy`` or ``VAGUETIME_BACKEND=numba`` to force one;
anything else (or unset) picks numba when available.

Exposed functions take (n, 4) float64 batches of boundary values
(pb, rb, re, pe) plus per-operand instant flags and return (n, 13)
possible/reliable boolean masks indexed by `codes`.
"""

import os

from . import codes, numpy_backend
from .codes import INVERSE, N_RELATIONS, NAMES


def _select():
    choice = os.environ.get("VAGUETIME_BACKEND", "auto").strip().lower() or "auto"
    if choice == "numpy":
        return "numpy", numpy_backend
    if choice == "numba":
        from . import numba_backend

        return "numba", numba_backend
    if choice == "auto":
        try:
            from . import numba_backend
        except ImportError:
            return "numpy", numpy_backend
        return "numba", numba_backend
    raise ValueError(
        f"unsupported VAGUETIME_BACKEND={choice!r} (expected 'numba' or 'numpy')"
    )


BACKEND, _impl = _select()

pair_states = _impl.pair_states
oracle_states = _impl.oracle_states

__all__ = [
    "BACKEND",
    "INVERSE",
    "NAMES",
    "N_RELATIONS",
    "codes",
    "oracle_states",
    "pair_states",
]
