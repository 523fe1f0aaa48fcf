"""Normal-form backend selection.

The compiled Cython kernel is preferred when it imported cleanly; the
pure-Python twin is the fallback.  Set ``IDELINK_KERNEL`` to ``python``
or ``compiled`` to force a backend (``auto`` or unset picks for you).
Both backends implement identical canonical forms, so the choice only
affects speed; ``bench/kernel_bench.py`` compares them.
"""

from __future__ import annotations

import os

from . import _kernel_py

_ENV_VAR = "IDELINK_KERNEL"


def _load(choice):
    if choice in ("", "auto"):
        try:
            from . import _kernel_c
        except ImportError:
            return _kernel_py
        return _kernel_c
    if choice in ("py", "python", "pure"):
        return _kernel_py
    if choice in ("c", "compiled", "cython"):
        from . import _kernel_c

        return _kernel_c
    raise ValueError(
        f"unrecognized {_ENV_VAR}={choice!r}; expected auto, python, or compiled"
    )


_impl = _load(os.environ.get(_ENV_VAR, "auto").strip().lower())

BACKEND = _impl.BACKEND
xgcd = _impl.xgcd
col_hnf = _impl.col_hnf
col_hnf_with_kernel = _impl.col_hnf_with_kernel
smith = _impl.smith
