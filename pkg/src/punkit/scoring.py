"""Scoring kernel selection.

Prefers the compiled Cython kernel and silently falls back to the NumPy
implementation when the extension is absent (pure install, failed build).
Both expose the same contract; ``KERNEL_BACKEND`` records which one won.
"""

from __future__ import annotations

import numpy as np

from . import _distkernel_py

try:
    from . import _distkernel  # compiled extension, may not exist

    _impl = _distkernel
    KERNEL_BACKEND = "cython"
except ImportError:
    _impl = _distkernel_py
    KERNEL_BACKEND = "numpy"


def _as_matrix(arr, name: str) -> np.ndarray:
    m = np.ascontiguousarray(arr, dtype=np.float64)
    if m.ndim != 2:
        raise ValueError(f"{name} must be a 2-d matrix, got ndim={m.ndim}")
    return m


def batch_pair_scores(pun_vecs, alt_vecs, ctx_vecs) -> np.ndarray:
    """Summed Euclidean distance of each (pun, alt) row pair to all context rows.

    ``pun_vecs``/``alt_vecs`` are (n_pairs, dim); ``ctx_vecs`` is
    (n_keywords, dim). Returns an (n_pairs,) float64 vector where lower
    means more compatible.
    """
    pun = _as_matrix(pun_vecs, "pun_vecs")
    alt = _as_matrix(alt_vecs, "alt_vecs")
    ctx = _as_matrix(ctx_vecs, "ctx_vecs")
    return np.asarray(_impl.batch_scores(pun, alt, ctx))


def available_kernels() -> dict:
    """Name -> callable for every importable kernel (used by the benchmark)."""
    kernels = {"numpy": _distkernel_py.batch_scores}
    if KERNEL_BACKEND == "cython":
        kernels["cython"] = _impl.batch_scores
    return kernels
