"""Seeded random field generators shared by the verification suites and tests.

Two exponent pools are used.  ADMISSIBLE keeps every axis exponent in
{0} or [2, inf), the sufficient condition for composing half-order
derivatives; LOOSE additionally allows exponents in [1, 2), which every
first-order operator accepts but second applications on the same axis may
not.  Orders are exact rationals drawn from a small menu.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .fracfield import Cube, FracField, OrderVector, UNIT_CUBE
from .fracvec import BiqField, VectorField

ADMISSIBLE_EXPONENTS = (
    Fraction(0),
    Fraction(2),
    Fraction(9, 4),
    Fraction(5, 2),
    Fraction(3),
    Fraction(7, 2),
    Fraction(4),
)

LOOSE_EXPONENTS = ADMISSIBLE_EXPONENTS + (
    Fraction(1),
    Fraction(5, 4),
    Fraction(3, 2),
    Fraction(7, 4),
)

ORDER_MENU = (
    Fraction(1, 4),
    Fraction(1, 3),
    Fraction(1, 2),
    Fraction(2, 3),
    Fraction(3, 4),
    Fraction(1),
)


def random_field(
    rng: random.Random,
    cube: Cube = UNIT_CUBE,
    *,
    pool=ADMISSIBLE_EXPONENTS,
    max_terms: int = 3,
    real: bool = False,
    positive: bool = False,
    axes=(1, 2, 3),
) -> FracField:
    """Random field with exponents drawn from `pool` on the given axes
    (other axes get exponent 0).  `positive` restricts coefficients to
    real values in [0.5, 2.5], handy for relative-error comparisons."""
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        exps = [Fraction(0)] * 3
        for axis in axes:
            exps[axis - 1] = rng.choice(pool)
        if positive:
            coeff = complex(rng.uniform(0.5, 2.5))
        elif real:
            coeff = complex(rng.uniform(-2.0, 2.0))
        else:
            coeff = complex(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0))
        terms.append((tuple(exps), coeff))
    return FracField(cube, terms)


def random_axis_field(
    rng: random.Random,
    axis: int = 1,
    cube: Cube = UNIT_CUBE,
    *,
    pool=ADMISSIBLE_EXPONENTS,
    max_terms: int = 3,
    positive: bool = False,
) -> FracField:
    """Random field varying along a single axis (a 1D profile)."""
    return random_field(rng, cube, pool=pool, max_terms=max_terms, positive=positive, axes=(axis,))


def random_vector(
    rng: random.Random,
    cube: Cube = UNIT_CUBE,
    *,
    pool=ADMISSIBLE_EXPONENTS,
    max_terms: int = 3,
) -> VectorField:
    return VectorField(
        random_field(rng, cube, pool=pool, max_terms=max_terms),
        random_field(rng, cube, pool=pool, max_terms=max_terms),
        random_field(rng, cube, pool=pool, max_terms=max_terms),
    )


def random_biq(
    rng: random.Random,
    cube: Cube = UNIT_CUBE,
    *,
    pool=ADMISSIBLE_EXPONENTS,
    max_terms: int = 3,
) -> BiqField:
    return BiqField(
        random_field(rng, cube, pool=pool, max_terms=max_terms),
        random_vector(rng, cube, pool=pool, max_terms=max_terms),
    )


def random_order(rng: random.Random) -> Fraction:
    return rng.choice(ORDER_MENU)


def random_order_vector(rng: random.Random) -> OrderVector:
    return OrderVector.of(random_order(rng), random_order(rng), random_order(rng))
