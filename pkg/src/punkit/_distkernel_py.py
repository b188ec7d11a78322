"""NumPy fallback for the compiled scoring kernel; identical contract."""

import numpy as np


def batch_scores(pun: np.ndarray, alt: np.ndarray, ctx: np.ndarray) -> np.ndarray:
    """out[j] = sum_i ||pun[j]-ctx[i]|| + sum_i ||alt[j]-ctx[i]||."""
    if pun.shape != alt.shape or pun.shape[1] != ctx.shape[1]:
        raise ValueError("shape mismatch between pun/alt/ctx matrices")
    dp = np.sqrt(((pun[:, None, :] - ctx[None, :, :]) ** 2).sum(axis=2))
    da = np.sqrt(((alt[:, None, :] - ctx[None, :, :]) ** 2).sum(axis=2))
    return dp.sum(axis=1) + da.sum(axis=1)
