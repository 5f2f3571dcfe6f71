"""Independent quadrature evaluation of Caputo derivatives and RL integrals.

This module is the numerical cross-check for the closed forms in
`fracfield`: it discretizes the defining integrals directly (L1 scheme for
the derivative, product trapezoid for the integral) on sampled 1D
restrictions, so agreement between the two paths validates both.

The O(N^2) convolution loops live in a compiled extension when available;
a numpy fallback with identical contracts is selected at import otherwise.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .fracfield import FracField, as_order

if os.environ.get("FRACQUAT_FORCE_NUMPY"):
    from . import _kernels_py as _kernels

    KERNEL_BACKEND = "numpy"
else:
    try:  # compiled kernels, if the extension was built
        from . import _kernels_c as _kernels

        KERNEL_BACKEND = "compiled"
    except ImportError:  # pragma: no cover - depends on build environment
        from . import _kernels_py as _kernels

        KERNEL_BACKEND = "numpy"

# Nodes closer to the base point than this fraction of the interval are
# excluded from relative-error comparisons: outputs behave like powers of
# (x - a) there and relative error is ill-conditioned.
EDGE_FRACTION = 0.1


def kernel_backend() -> str:
    """Which kernel implementation was selected at import."""
    return KERNEL_BACKEND


@dataclass(frozen=True)
class SampledFn:
    """Complex samples at the uniform nodes x_k = a + k (b - a) / N."""

    a: float
    b: float
    values: np.ndarray

    def __post_init__(self):
        vals = np.ascontiguousarray(self.values, dtype=np.complex128)
        if vals.ndim != 1 or vals.shape[0] < 9:
            raise DomainError("need at least N = 8 intervals of samples")
        if not np.all(np.isfinite(vals)):
            raise DomainError("samples must be finite")
        if not self.a < self.b:
            raise DomainError(f"need a < b, got [{self.a}, {self.b}]")
        object.__setattr__(self, "values", vals)

    @property
    def n(self) -> int:
        return self.values.shape[0] - 1

    @property
    def h(self) -> float:
        return (self.b - self.a) / self.n

    @property
    def nodes(self) -> np.ndarray:
        return np.linspace(self.a, self.b, self.n + 1)

    @classmethod
    def sample(cls, fn, a: float, b: float, n: int) -> "SampledFn":
        x = np.linspace(a, b, n + 1)
        return cls(a, b, np.array([fn(v) for v in x], dtype=np.complex128))


def l1_caputo(f: SampledFn, alpha: float) -> SampledFn:
    """L1-scheme Caputo derivative of order alpha strictly inside (0, 1)."""
    alpha = float(alpha)
    if not (0.0 < alpha < 1.0):
        raise DomainError(f"L1 scheme needs order in the open interval (0, 1), got {alpha}")
    out = _kernels.l1_caputo_kernel(f.values, f.h, alpha)
    return SampledFn(f.a, f.b, out)


def rl_integral_quad(f: SampledFn, alpha: float) -> SampledFn:
    """Product-trapezoidal RL integral of order alpha > 0."""
    alpha = float(alpha)
    if alpha <= 0.0:
        raise DomainError(f"integral order must be positive, got {alpha}")
    out = _kernels.rl_integral_kernel(f.values, f.h, alpha)
    return SampledFn(f.a, f.b, out)


def _profile_values(profile: dict, t: np.ndarray) -> np.ndarray:
    out = np.zeros_like(t, dtype=np.complex128)
    for p, coeff in profile.items():
        if p == 0:
            out += coeff
        else:
            out += coeff * t ** float(p)
    return out


def sample_restriction(field: FracField, axis: int, at, n: int) -> SampledFn:
    """Sample the 1D restriction of a field along one axis."""
    profile = field.restrict(axis, at)
    cube = field.cube
    t = np.linspace(0.0, cube.width, n + 1)
    return SampledFn(cube.a, cube.b, _profile_values(profile, t))


def compare_axis(field: FracField, axis: int, op: str, order, n: int = 4096, at=None) -> float:
    """Max relative error between the closed form and the quadrature oracle.

    The field is restricted to `axis` (other coordinates frozen at `at`,
    midpoints by default), both the symbolic result and the oracle output
    are evaluated on the uniform nodes, and the comparison keeps nodes with
    x - a >= EDGE_FRACTION * (b - a).
    """
    cube = field.cube
    exact_order = as_order(order)
    if at is None:
        mid = 0.5 * (cube.a + cube.b)
        at = (mid, mid, mid)
    sampled = sample_restriction(field, axis, at, n)
    if op == "caputo":
        approx = l1_caputo(sampled, float(exact_order))
        exact_field = field.caputo(axis, exact_order)
    elif op == "rl":
        approx = rl_integral_quad(sampled, float(exact_order))
        exact_field = field.rl_integral(axis, exact_order)
    else:
        raise DomainError(f"op must be 'caputo' or 'rl', got {op!r}")
    t = np.linspace(0.0, cube.width, n + 1)
    exact = _profile_values(exact_field.restrict(axis, at), t)
    keep = t >= EDGE_FRACTION * cube.width
    diff = np.abs(approx.values[keep] - exact[keep])
    ref = np.abs(exact[keep])
    scale = ref.max(initial=0.0)
    if scale == 0.0:
        return float(diff.max(initial=0.0))
    # pointwise relative error with a floor that keeps near-roots of the
    # exact profile from dominating the comparison
    return float((diff / np.maximum(ref, 1e-8 * scale)).max())


def convergence_ratio(field: FracField, axis: int, op: str, order, n: int, at=None) -> float:
    """error(n) / error(2n); large values mean the oracle is converging."""
    e1 = compare_axis(field, axis, op, order, n, at=at)
    e2 = compare_axis(field, axis, op, order, 2 * n, at=at)
    if e2 == 0.0:
        return float("inf") if e1 > 0 else 0.0
    return e1 / e2
