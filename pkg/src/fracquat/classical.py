"""Independent integer-order vector calculus on FracFields.

Used as the comparison path for the classical-reduction checks: at orders
(1, 1, 1) the fractional operators must reproduce these, which multiply by
the exponent directly and never touch the gamma function.
"""

from __future__ import annotations

from .errors import DomainError
from .fracfield import FracField
from .fracvec import BiqField, VectorField


def deriv(f: FracField, axis: int) -> FracField:
    """Elementary partial derivative: c t^p -> c p t^(p-1), needs p = 0 or p >= 1."""
    ax = axis - 1
    if ax not in (0, 1, 2):
        raise DomainError(f"axis must be 1, 2 or 3, got {axis}")
    out = {}
    for key, coeff in f.terms.items():
        p = key[ax]
        if p == 0:
            continue
        if p < 1:
            raise DomainError(
                f"classical derivative of exponent {p} on axis {axis} leaves the class"
            )
        new_key = key[:ax] + (p - 1,) + key[ax + 1:]
        out[new_key] = coeff * (p.numerator / p.denominator)
    return FracField(f.cube, out)


def grad(u0: FracField) -> VectorField:
    return VectorField(deriv(u0, 1), deriv(u0, 2), deriv(u0, 3))


def div(u: VectorField) -> FracField:
    return deriv(u.u1, 1) + deriv(u.u2, 2) + deriv(u.u3, 3)


def curl(u: VectorField) -> VectorField:
    return VectorField(
        deriv(u.u3, 2) - deriv(u.u2, 3),
        deriv(u.u1, 3) - deriv(u.u3, 1),
        deriv(u.u2, 1) - deriv(u.u1, 2),
    )


def laplace_field(f: FracField) -> FracField:
    return (
        deriv(deriv(f, 1), 1)
        + deriv(deriv(f, 2), 2)
        + deriv(deriv(f, 3), 3)
    )


def laplace(U: BiqField) -> BiqField:
    return BiqField(
        laplace_field(U.u0),
        VectorField(
            laplace_field(U.u.u1),
            laplace_field(U.u.u2),
            laplace_field(U.u.u3),
        ),
    )


def dirac_left(U: BiqField) -> BiqField:
    return BiqField(-div(U.u), grad(U.u0) + curl(U.u))
