"""Fractional vector calculus and quaternionic operators over FracFields.

First-order operators (gradient, divergence, curl, Dirac) differentiate
axis n with order (1 + alpha_n)/2; the Laplace operator uses 1 + alpha_n.
With that pairing, applying the Dirac operator twice on a component whose
axis restrictions satisfy the composition hypotheses reproduces exactly the
Laplace orders: (1 + a)/2 + (1 + a)/2 = 1 + a.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CubeMismatch, DomainError
from .fracfield import Cube, FracField, OrderVector, coeff_distance


@dataclass(frozen=True)
class VectorField:
    """Three FracField components on a shared cube."""

    u1: FracField
    u2: FracField
    u3: FracField

    def __post_init__(self):
        if not (self.u1.cube == self.u2.cube == self.u3.cube):
            raise CubeMismatch("vector components must share one cube")

    @classmethod
    def zero(cls, cube: Cube) -> "VectorField":
        z = FracField.zero(cube)
        return cls(z, z, z)

    @property
    def cube(self) -> Cube:
        return self.u1.cube

    @property
    def components(self) -> tuple[FracField, FracField, FracField]:
        return (self.u1, self.u2, self.u3)

    @property
    def is_zero(self) -> bool:
        return self.u1.is_zero and self.u2.is_zero and self.u3.is_zero

    @property
    def max_coeff(self) -> float:
        return max(c.max_coeff for c in self.components)

    def __add__(self, other: "VectorField") -> "VectorField":
        return VectorField(self.u1 + other.u1, self.u2 + other.u2, self.u3 + other.u3)

    def __sub__(self, other: "VectorField") -> "VectorField":
        return VectorField(self.u1 - other.u1, self.u2 - other.u2, self.u3 - other.u3)

    def __neg__(self) -> "VectorField":
        return VectorField(-self.u1, -self.u2, -self.u3)

    def __mul__(self, factor) -> "VectorField":
        return VectorField(self.u1 * factor, self.u2 * factor, self.u3 * factor)

    __rmul__ = __mul__

    def norm_max(self, grid: int = 33) -> float:
        return max(c.norm_max(grid) for c in self.components)


def cross_const(v, field: VectorField) -> VectorField:
    """(constant vector) x (vector field), components of v as scalars."""
    v1, v2, v3 = (complex(c) for c in v)
    f1, f2, f3 = field.components
    return VectorField(f3 * v2 - f2 * v3, f1 * v3 - f3 * v1, f2 * v1 - f1 * v2)


def dot_const(v, field: VectorField) -> FracField:
    """(constant vector) . (vector field)."""
    v1, v2, v3 = (complex(c) for c in v)
    return field.u1 * v1 + field.u2 * v2 + field.u3 * v3


def scalar_times_const(f: FracField, v) -> VectorField:
    """(scalar field) * (constant vector)."""
    return VectorField(f * complex(v[0]), f * complex(v[1]), f * complex(v[2]))


@dataclass(frozen=True)
class BiqField:
    """Biquaternion-valued field: scalar part u0 plus vector part u."""

    u0: FracField
    u: VectorField

    def __post_init__(self):
        if self.u0.cube != self.u.cube:
            raise CubeMismatch("scalar and vector parts must share one cube")

    @classmethod
    def zero(cls, cube: Cube) -> "BiqField":
        return cls(FracField.zero(cube), VectorField.zero(cube))

    @classmethod
    def from_scalar(cls, f: FracField) -> "BiqField":
        return cls(f, VectorField.zero(f.cube))

    @classmethod
    def from_vector(cls, v: VectorField) -> "BiqField":
        return cls(FracField.zero(v.cube), v)

    @property
    def cube(self) -> Cube:
        return self.u0.cube

    @property
    def components(self) -> tuple[FracField, FracField, FracField, FracField]:
        return (self.u0, self.u.u1, self.u.u2, self.u.u3)

    @property
    def sc(self) -> FracField:
        return self.u0

    @property
    def vec(self) -> VectorField:
        return self.u

    @property
    def is_zero(self) -> bool:
        return self.u0.is_zero and self.u.is_zero

    @property
    def max_coeff(self) -> float:
        return max(self.u0.max_coeff, self.u.max_coeff)

    def __add__(self, other: "BiqField") -> "BiqField":
        return BiqField(self.u0 + other.u0, self.u + other.u)

    def __sub__(self, other: "BiqField") -> "BiqField":
        return BiqField(self.u0 - other.u0, self.u - other.u)

    def __neg__(self) -> "BiqField":
        return BiqField(-self.u0, -self.u)

    def __mul__(self, factor) -> "BiqField":
        return BiqField(self.u0 * factor, self.u * factor)

    __rmul__ = __mul__

    def norm_max(self, grid: int = 33) -> float:
        return max(self.u0.norm_max(grid), self.u.norm_max(grid))


def biq_rel_residual(f: BiqField, g: BiqField) -> float:
    """Componentwise relative coefficient residual, max over the 4 slots."""
    scale = max(f.max_coeff, g.max_coeff)
    if scale == 0.0:
        return 0.0
    return max(coeff_distance(a, b) for a, b in zip(f.components, g.components)) / scale


def vec_rel_residual(f: VectorField, g: VectorField) -> float:
    scale = max(f.max_coeff, g.max_coeff)
    if scale == 0.0:
        return 0.0
    return max(coeff_distance(a, b) for a, b in zip(f.components, g.components)) / scale


# -- first-order operators ---------------------------------------------------


def grad(u0: FracField, order: OrderVector) -> VectorField:
    """Fractional gradient: component n carries order (1 + alpha_n)/2."""
    return VectorField(
        u0.caputo(1, order.half_order(1)),
        u0.caputo(2, order.half_order(2)),
        u0.caputo(3, order.half_order(3)),
    )


def div(u: VectorField, order: OrderVector) -> FracField:
    """Fractional divergence: sum of the three axis derivatives."""
    return (
        u.u1.caputo(1, order.half_order(1))
        + u.u2.caputo(2, order.half_order(2))
        + u.u3.caputo(3, order.half_order(3))
    )


def curl(u: VectorField, order: OrderVector) -> VectorField:
    """Fractional curl with per-axis orders (1 + alpha_n)/2."""
    d1 = lambda f: f.caputo(1, order.half_order(1))
    d2 = lambda f: f.caputo(2, order.half_order(2))
    d3 = lambda f: f.caputo(3, order.half_order(3))
    return VectorField(
        d2(u.u3) - d3(u.u2),
        d3(u.u1) - d1(u.u3),
        d1(u.u2) - d2(u.u1),
    )


# -- quaternionic operators ----------------------------------------------------


def _partial(F: BiqField, axis: int, mu) -> BiqField:
    return BiqField(
        F.u0.caputo(axis, mu),
        VectorField(
            F.u.u1.caputo(axis, mu),
            F.u.u2.caputo(axis, mu),
            F.u.u3.caputo(axis, mu),
        ),
    )


def _unit_mul_left(n: int, F: BiqField) -> BiqField:
    """e_n * F for n in {1, 2, 3} (componentwise sign/permutation table)."""
    f0, f1, f2, f3 = F.components
    if n == 1:
        return BiqField(-f1, VectorField(f0, -f3, f2))
    if n == 2:
        return BiqField(-f2, VectorField(f3, f0, -f1))
    if n == 3:
        return BiqField(-f3, VectorField(-f2, f1, f0))
    raise DomainError(f"unit index must be 1..3, got {n}")


def _unit_mul_right(F: BiqField, n: int) -> BiqField:
    """F * e_n for n in {1, 2, 3}."""
    f0, f1, f2, f3 = F.components
    if n == 1:
        return BiqField(-f1, VectorField(f0, f3, -f2))
    if n == 2:
        return BiqField(-f2, VectorField(-f3, f0, f1))
    if n == 3:
        return BiqField(-f3, VectorField(f2, -f1, f0))
    raise DomainError(f"unit index must be 1..3, got {n}")


def dirac_left(U: BiqField, order: OrderVector) -> BiqField:
    """Left fractional Dirac operator, assembled from the vector operators:
    scalar part -div(u), vector part grad(u0) + curl(u)."""
    return BiqField(-div(U.u, order), grad(U.u0, order) + curl(U.u, order))


def dirac_left_direct(U: BiqField, order: OrderVector) -> BiqField:
    """Same operator as the basis-expansion sum of e_n times the axis
    derivatives; independent code path kept for cross-validation."""
    total = BiqField.zero(U.cube)
    for n in (1, 2, 3):
        total = total + _unit_mul_left(n, _partial(U, n, order.half_order(n)))
    return total


def dirac_right(U: BiqField, order: OrderVector) -> BiqField:
    """Right fractional Dirac operator: sum of axis derivatives times e_n."""
    total = BiqField.zero(U.cube)
    for n in (1, 2, 3):
        total = total + _unit_mul_right(_partial(U, n, order.half_order(n)), n)
    return total


def require_admissible(U: BiqField) -> None:
    """Raise unless every component is composition-admissible on every axis."""
    names = ("scalar part", "e1 component", "e2 component", "e3 component")
    for name, comp in zip(names, U.components):
        for axis in (1, 2, 3):
            if not comp.semigroup_admissible(axis):
                raise DomainError(
                    f"{name} is not admissible on axis {axis}: exponents must be 0 or >= 2"
                )


def laplace(U: BiqField, order: OrderVector) -> BiqField:
    """Fractional Laplace operator: per axis, a derivative of order
    1 + alpha_n, applied componentwise.  Components must be admissible on
    every axis so the order-(1, 2] derivatives exist inside the class."""
    require_admissible(U)

    def lap(f: FracField) -> FracField:
        return (
            f.caputo(1, order.full_order(1))
            + f.caputo(2, order.full_order(2))
            + f.caputo(3, order.full_order(3))
        )

    return BiqField(lap(U.u0), VectorField(lap(U.u.u1), lap(U.u.u2), lap(U.u.u3)))


def laplace_vec(u: VectorField, order: OrderVector) -> VectorField:
    return laplace(BiqField.from_vector(u), order).vec


def dirac_displaced(U: BiqField, order: OrderVector, kappa, sign: int = 1) -> BiqField:
    """Displaced Dirac operator (D + sign * kappa) U."""
    if sign not in (1, -1):
        raise DomainError(f"sign must be +1 or -1, got {sign}")
    return dirac_left(U, order) + (sign * complex(kappa)) * U


def helmholtz(U: BiqField, order: OrderVector, kappa) -> BiqField:
    """Fractional Helmholtz operator (Laplace + kappa^2) U."""
    k = complex(kappa)
    return laplace(U, order) + (k * k) * U


# -- independent residual helpers used throughout the test suites ----------


def factorization_residual(U: BiqField, order: OrderVector) -> float:
    """Relative residual of -D(D U) = Laplace U on an admissible field."""
    lhs = -dirac_left(dirac_left(U, order), order)
    rhs = laplace(U, order)
    return biq_rel_residual(lhs, rhs)


def helmholtz_factorization_residual(U: BiqField, order: OrderVector, kappa) -> float:
    """Relative residual of -(D - kappa)(D + kappa) U = (Laplace + kappa^2) U."""
    inner = dirac_displaced(U, order, kappa, sign=+1)
    lhs = -dirac_displaced(inner, order, kappa, sign=-1)
    rhs = helmholtz(U, order, kappa)
    return biq_rel_residual(lhs, rhs)


def div_curl_field(u: VectorField, order: OrderVector) -> FracField:
    """div(curl(u)); normalizes to the empty field for every vector field
    representable in the class (cross-axis derivatives commute term-wise)."""
    return div(curl(u, order), order)


def dirac_decomposition_exact(U: BiqField, order: OrderVector) -> bool:
    """Check that the Dirac output partitions as (-div | grad + curl)."""
    D = dirac_left(U, order)
    scalar_ok = D.sc.terms == (-div(U.u, order)).terms
    expected_vec = grad(U.u0, order) + curl(U.u, order)
    vector_ok = all(
        a.terms == b.terms for a, b in zip(D.vec.components, expected_vec.components)
    )
    return scalar_ok and vector_ok
