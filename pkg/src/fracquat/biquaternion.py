"""Complex quaternions (biquaternions): the algebra H(C) at value level.

Basis 1, e1, e2, e3 with e_m e_n + e_n e_m = -2 delta_mn and e1 e2 = e3.
Values are immutable; all operations return new instances.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .errors import DomainError


def _as_finite_complex(value) -> complex:
    c = complex(value)
    if not (cmath.isfinite(c)):
        raise DomainError(f"non-finite component {value!r} not admitted")
    return c


@dataclass(frozen=True)
class Biquaternion:
    """q = q0 + q1*e1 + q2*e2 + q3*e3 with complex components."""

    q0: complex = 0j
    q1: complex = 0j
    q2: complex = 0j
    q3: complex = 0j

    def __post_init__(self):
        for name in ("q0", "q1", "q2", "q3"):
            object.__setattr__(self, name, _as_finite_complex(getattr(self, name)))

    @classmethod
    def from_scalar(cls, value) -> "Biquaternion":
        return cls(q0=value)

    @classmethod
    def from_vector(cls, v1, v2, v3) -> "Biquaternion":
        return cls(q1=v1, q2=v2, q3=v3)

    @classmethod
    def unit(cls, n: int) -> "Biquaternion":
        """Basis element e_n for n in {0, 1, 2, 3} (e_0 = 1)."""
        if n not in (0, 1, 2, 3):
            raise DomainError(f"unit index must be 0..3, got {n}")
        comps = [0j, 0j, 0j, 0j]
        comps[n] = 1 + 0j
        return cls(*comps)

    @property
    def components(self) -> tuple[complex, complex, complex, complex]:
        return (self.q0, self.q1, self.q2, self.q3)

    @property
    def sc(self) -> complex:
        """Scalar part."""
        return self.q0

    @property
    def vec(self) -> "Biquaternion":
        """Vector part, as a purely vectorial biquaternion."""
        return Biquaternion(0j, self.q1, self.q2, self.q3)

    def conj(self) -> "Biquaternion":
        """Quaternionic conjugate q0 - (q1 e1 + q2 e2 + q3 e3)."""
        return Biquaternion(self.q0, -self.q1, -self.q2, -self.q3)

    def __add__(self, other: "Biquaternion") -> "Biquaternion":
        return Biquaternion(
            self.q0 + other.q0,
            self.q1 + other.q1,
            self.q2 + other.q2,
            self.q3 + other.q3,
        )

    def __sub__(self, other: "Biquaternion") -> "Biquaternion":
        return self + (-other)

    def __neg__(self) -> "Biquaternion":
        return Biquaternion(-self.q0, -self.q1, -self.q2, -self.q3)

    def __mul__(self, other):
        if isinstance(other, Biquaternion):
            p0, p1, p2, p3 = self.components
            q0, q1, q2, q3 = other.components
            # p q = p0 q0 - p.q + p0 q_vec + q0 p_vec + p x q
            return Biquaternion(
                p0 * q0 - (p1 * q1 + p2 * q2 + p3 * q3),
                p0 * q1 + q0 * p1 + (p2 * q3 - p3 * q2),
                p0 * q2 + q0 * p2 + (p3 * q1 - p1 * q3),
                p0 * q3 + q0 * p3 + (p1 * q2 - p2 * q1),
            )
        return self.scale(other)

    def __rmul__(self, other):
        # complex scalars commute with everything
        return self.scale(other)

    def scale(self, factor) -> "Biquaternion":
        c = _as_finite_complex(factor)
        return Biquaternion(c * self.q0, c * self.q1, c * self.q2, c * self.q3)

    def isclose(self, other: "Biquaternion", rtol: float = 1e-12, atol: float = 1e-12) -> bool:
        scale = max(max(abs(c) for c in self.components), max(abs(c) for c in other.components))
        bound = atol + rtol * scale
        return all(abs(a - b) <= bound for a, b in zip(self.components, other.components))


ONE = Biquaternion.unit(0)
E1 = Biquaternion.unit(1)
E2 = Biquaternion.unit(2)
E3 = Biquaternion.unit(3)
