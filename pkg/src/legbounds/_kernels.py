"""Backend selection for the recurrence kernels.

The compiled extension is preferred when importable; otherwise the numpy
fallback is used.  Set ``LEGBOUNDS_BACKEND=python`` or ``=cython`` to
force one side (forcing cython raises if the extension is missing).
"""

import os

_forced = os.environ.get("LEGBOUNDS_BACKEND", "").strip().lower()

if _forced == "python":
    from . import _kernels_py as _impl
elif _forced == "cython":
    from . import _ckernels as _impl  # type: ignore[no-redef]
elif _forced:
    raise ValueError(f"unknown LEGBOUNDS_BACKEND value: {_forced!r}")
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _kernels_py as _impl  # type: ignore[no-redef]

BACKEND = _impl.BACKEND_NAME

sequence_at = _impl.sequence_at
eval_at = _impl.eval_at
eval_with_derivative = _impl.eval_with_derivative
series_eval = _impl.series_eval
degree_weighted_absmax = _impl.degree_weighted_absmax
running_sup_errors = _impl.running_sup_errors
weighted_moments = _impl.weighted_moments
