"""Numpy fallback for the quadrature kernels.

Same contracts as the compiled module `_kernels_c`; used when the extension
is unavailable.  The lower-triangular Toeplitz sums are evaluated with
np.convolve, which does roughly twice the arithmetic of the compiled
triangle loop but stays at C speed.
"""

from __future__ import annotations

import math

import numpy as np


def l1_caputo_kernel(values: np.ndarray, h: float, alpha: float) -> np.ndarray:
    """L1 discretization of the left Caputo derivative, order alpha in (0,1).

    Piecewise-linear interpolant of the samples inside the defining
    integral; node 0 is set to 0 by convention.
    """
    n = values.shape[0] - 1
    m = np.arange(n, dtype=np.float64)
    weights = (m + 1.0) ** (1.0 - alpha) - m ** (1.0 - alpha)
    diffs = np.diff(values)
    out = np.empty(n + 1, dtype=np.complex128)
    out[0] = 0.0
    out[1:] = np.convolve(weights, diffs)[:n]
    out *= h ** (-alpha) / math.gamma(2.0 - alpha)
    return out


def rl_integral_kernel(values: np.ndarray, h: float, alpha: float) -> np.ndarray:
    """Product-trapezoidal discretization of the left Riemann-Liouville
    integral of order alpha > 0 (exact for affine integrands)."""
    n = values.shape[0] - 1
    m = np.arange(1, n + 1, dtype=np.float64)
    mm1 = m - 1.0
    ma = m ** alpha
    mm1a = mm1 ** alpha
    ma1 = ma * m
    mm1a1 = mm1a * mm1
    # per-interval weights for the far node f_j and the near node f_{j+1}
    far = (ma1 - mm1a1) / (alpha + 1.0) - mm1 * (ma - mm1a) / alpha
    near = ma1 * (1.0 / alpha - 1.0 / (alpha + 1.0)) - m * mm1a / alpha + mm1a1 / (alpha + 1.0)
    out = np.empty(n + 1, dtype=np.complex128)
    out[0] = 0.0
    out[1:] = np.convolve(far, values[:-1])[:n] + np.convolve(near, values[1:])[:n]
    out *= h ** alpha / math.gamma(alpha)
    return out
