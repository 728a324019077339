"""Compiled accumulation kernels with a fixed, compensated summation order.

Gram entries are summed over samples in ascending index order with Kahan
compensation, which keeps the results bit-identical regardless of worker
or BLAS thread counts.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def gram_kahan(phit: np.ndarray) -> np.ndarray:
    """Gram matrix (1/n) * Phi^T Phi from the transposed design (d, n)."""
    d, n = phit.shape
    out = np.empty((d, d))
    for j in range(d):
        for k in range(j, d):
            s = 0.0
            comp = 0.0
            for i in range(n):
                y = phit[j, i] * phit[k, i] - comp
                t = s + y
                comp = (t - s) - y
                s = t
            val = s / n
            out[j, k] = val
            out[k, j] = val
    return out


@njit(cache=True, nogil=True)
def gram_kahan_batch(phit: np.ndarray) -> np.ndarray:
    """Batched variant for a (trials, d, n) stack of designs."""
    t, d, n = phit.shape
    out = np.empty((t, d, d))
    for b in range(t):
        for j in range(d):
            for k in range(j, d):
                s = 0.0
                comp = 0.0
                for i in range(n):
                    y = phit[b, j, i] * phit[b, k, i] - comp
                    tt = s + y
                    comp = (tt - s) - y
                    s = tt
                val = s / n
                out[b, j, k] = val
                out[b, k, j] = val
    return out


@njit(cache=True, nogil=True)
def moment_kahan(phit: np.ndarray, values: np.ndarray) -> np.ndarray:
    """Right-hand side (1/n) * Phi^T f with the same summation discipline."""
    d, n = phit.shape
    out = np.empty(d)
    for j in range(d):
        s = 0.0
        comp = 0.0
        for i in range(n):
            y = phit[j, i] * values[i] - comp
            t = s + y
            comp = (t - s) - y
            s = t
        out[j] = s / n
    return out
