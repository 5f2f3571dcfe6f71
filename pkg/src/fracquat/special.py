"""Gamma function for real arguments via the Lanczos approximation.

All derivative/integral coefficient ratios in this package go through
:func:`gamma`.  Only strictly positive arguments ever reach it: the p = 0
(and, for orders above one, p = 1) monomial cases are handled by explicit
case analysis upstream, never by relying on reciprocal-gamma zeros.
Relative error is below 1e-12 on (0, 50].
"""

from __future__ import annotations

import math

from .errors import DomainError

# Lanczos coefficients for g = 7, n = 9 (double precision).
_LANCZOS_G = 7.0
_LANCZOS_C = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def gamma(z: float) -> float:
    """Gamma(z) for real z > 0 (nonpositive arguments are refused)."""
    z = float(z)
    if not math.isfinite(z):
        raise DomainError(f"gamma argument must be finite, got {z!r}")
    if z <= 0.0:
        raise DomainError(f"gamma evaluated at nonpositive argument {z!r}")
    if z < 0.5:
        # reflection keeps the series argument in its accurate range
        return math.pi / (math.sin(math.pi * z) * gamma(1.0 - z))
    z -= 1.0
    acc = _LANCZOS_C[0]
    for i, c in enumerate(_LANCZOS_C[1:], start=1):
        acc += c / (z + i)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (z + 0.5) * math.exp(-t) * acc


def gamma_ratio(p: float, q: float) -> float:
    """Gamma(p) / Gamma(q), both arguments strictly positive."""
    return gamma(p) / gamma(q)
