# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops: lag correlation and the single-pole IIR filter."""

from libc.math cimport fabs

import numpy as np


def xcorr(const double[::1] f, const double[::1] g, long lag_lo, long lag_hi, bint common):
    """Sum of the elementwise product over the overlap, for each lag.

    Lag k aligns g[i - k] with f[i]; samples outside either signal contribute
    nothing. ``common`` selects the signed-minimum product instead of the
    plain product. Returns one value per lag in [lag_lo, lag_hi]; the caller
    applies the dt scale. Lags are independent, so evaluation order carries
    no state.
    """
    cdef Py_ssize_t nf = f.shape[0]
    cdef Py_ssize_t ng = g.shape[0]
    cdef Py_ssize_t nlag = <Py_ssize_t> (lag_hi - lag_lo + 1)
    out_arr = np.zeros(nlag, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t idx, i, lo, hi
    cdef long k
    cdef double acc, a, b, sgn
    for idx in range(nlag):
        k = lag_lo + idx
        lo = k if k > 0 else 0
        hi = nf - 1
        if hi > k + ng - 1:
            hi = k + ng - 1
        acc = 0.0
        if common:
            for i in range(lo, hi + 1):
                a = f[i]
                b = g[i - k]
                sgn = 1.0
                if a < 0.0:
                    sgn = -sgn
                if b < 0.0:
                    sgn = -sgn
                a = fabs(a)
                b = fabs(b)
                acc += sgn * (a if a < b else b)
        else:
            for i in range(lo, hi + 1):
                acc += f[i] * g[i - k]
        out[idx] = acc
    return out_arr


def lowpass(const double[::1] x, double alpha):
    """Single-pole IIR: y[n] = y[n-1] + alpha * (x[n] - y[n-1]), y[-1] = 0."""
    cdef Py_ssize_t n = x.shape[0]
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef double y = 0.0
    cdef Py_ssize_t i
    for i in range(n):
        y += alpha * (x[i] - y)
        out[i] = y
    return out_arr
