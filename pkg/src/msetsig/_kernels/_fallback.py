"""Numpy fallback for the compiled kernels; identical signatures and results."""

import numpy as np


def xcorr(f: np.ndarray, g: np.ndarray, lag_lo: int, lag_hi: int, common: bool) -> np.ndarray:
    """Per-lag overlap sums; see the compiled twin for the contract."""
    nf = f.size
    ng = g.size
    out = np.zeros(lag_hi - lag_lo + 1, dtype=np.float64)
    for idx, k in enumerate(range(lag_lo, lag_hi + 1)):
        lo = max(0, k)
        hi = min(nf - 1, k + ng - 1)
        if hi < lo:
            continue
        a = f[lo : hi + 1]
        b = g[lo - k : hi - k + 1]
        if common:
            sgn = np.where(a >= 0.0, 1.0, -1.0) * np.where(b >= 0.0, 1.0, -1.0)
            out[idx] = np.sum(sgn * np.minimum(np.abs(a), np.abs(b)))
        else:
            out[idx] = np.dot(a, b)
    return out


def lowpass(x: np.ndarray, alpha: float) -> np.ndarray:
    """Single-pole IIR: y[n] = y[n-1] + alpha * (x[n] - y[n-1]), y[-1] = 0."""
    out = np.empty(x.size, dtype=np.float64)
    y = 0.0
    for i, v in enumerate(x):
        y += alpha * (v - y)
        out[i] = y
    return out
