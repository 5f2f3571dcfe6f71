"""Fractional polynomials on a cube: the closed class for exact calculus.

A field is a finite sum of terms

    c * (x1 - a)^p1 * (x2 - a)^p2 * (x3 - a)^p3

with complex coefficient c and nonnegative *exact rational* exponents p_n.
Left Caputo derivatives and Riemann-Liouville integrals map single terms to
single terms, so every identity checked by this package reduces to finite
coefficient arithmetic: exponents never see floating point, coefficients
are complex doubles with gamma-function ratios accurate to ~1e-15.

Closure rule: an operation whose result would carry a negative exponent
(i.e. a function singular at the cube corner) raises DomainError instead of
silently leaving the class.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import CubeMismatch, DomainError
from .special import gamma

# Terms whose coefficient is below PRUNE_REL times the working scale are
# dropped during normalization; far below every identity tolerance in use.
PRUNE_REL = 1e-14

Exponents = tuple[Fraction, Fraction, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)
_TWO = Fraction(2)


def as_exponent(value) -> Fraction:
    """Coerce to an exact nonnegative Fraction; floats are refused."""
    q = _as_fraction(value, what="exponent")
    if q < 0:
        raise DomainError(f"exponent must be nonnegative, got {q}")
    return q


def as_order(value) -> Fraction:
    """Coerce a differentiation/integration order to an exact Fraction."""
    return _as_fraction(value, what="order")


def _as_fraction(value, what: str) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, tuple) and len(value) == 2:
        return Fraction(int(value[0]), int(value[1]))
    # no float branch on purpose: exponent bookkeeping must stay exact
    raise DomainError(f"{what} must be an exact rational (int/Fraction/'p/q'), got {value!r}")


@dataclass(frozen=True)
class Cube:
    """The domain W = [a, b]^3."""

    a: float
    b: float

    def __post_init__(self):
        if not (self.a < self.b):
            raise DomainError(f"cube needs a < b, got [{self.a}, {self.b}]")

    @property
    def width(self) -> float:
        return self.b - self.a

    def contains(self, x) -> bool:
        return all(self.a <= float(c) <= self.b for c in x)

    def axis_nodes(self, n: int) -> np.ndarray:
        return np.linspace(self.a, self.b, n)


UNIT_CUBE = Cube(0.0, 1.0)


@dataclass(frozen=True)
class OrderVector:
    """Per-axis orders (alpha1, alpha2, alpha3), each in (0, 1]."""

    alpha1: Fraction
    alpha2: Fraction
    alpha3: Fraction

    def __post_init__(self):
        for name in ("alpha1", "alpha2", "alpha3"):
            q = as_order(getattr(self, name))
            if not (0 < q <= 1):
                raise DomainError(f"{name} must lie in (0, 1], got {q}")
            object.__setattr__(self, name, q)

    @classmethod
    def of(cls, a1, a2, a3) -> "OrderVector":
        return cls(as_order(a1), as_order(a2), as_order(a3))

    @classmethod
    def uniform(cls, a) -> "OrderVector":
        q = as_order(a)
        return cls(q, q, q)

    @property
    def alphas(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.alpha1, self.alpha2, self.alpha3)

    def half_order(self, axis: int) -> Fraction:
        """(1 + alpha_axis) / 2 — the order carried by first-order operators."""
        return (1 + self.alphas[axis - 1]) / 2

    def full_order(self, axis: int) -> Fraction:
        """1 + alpha_axis — the order carried by the Laplace operator."""
        return 1 + self.alphas[axis - 1]

    @property
    def is_classical(self) -> bool:
        return all(a == 1 for a in self.alphas)


def _check_axis(axis: int) -> int:
    if axis not in (1, 2, 3):
        raise DomainError(f"axis must be 1, 2 or 3, got {axis}")
    return axis - 1


def _canonical(raw: dict[Exponents, complex], scale: float) -> dict[Exponents, complex]:
    """Drop zero and relatively negligible coefficients."""
    if not raw:
        return {}
    own = max(abs(c) for c in raw.values())
    cutoff = PRUNE_REL * max(scale, own)
    return {k: c for k, c in raw.items() if abs(c) > cutoff}


class FracField:
    """Immutable fractional polynomial on a cube.

    Terms are keyed by their exponent triple; construction merges duplicate
    keys and prunes negligible coefficients, so equal fields have equal
    term dictionaries up to floating-point rounding of the coefficients.
    """

    __slots__ = ("cube", "_terms")

    def __init__(self, cube: Cube, terms=None):
        items = []
        if terms:
            items = terms.items() if isinstance(terms, dict) else list(terms)
        merged: dict[Exponents, complex] = {}
        for exps, coeff in items:
            key = tuple(as_exponent(p) for p in exps)
            if len(key) != 3:
                raise DomainError(f"need exactly 3 exponents, got {exps!r}")
            c = complex(coeff)
            if c != 0j:
                merged[key] = merged.get(key, 0j) + c
        object.__setattr__(self, "cube", cube)
        object.__setattr__(self, "_terms", _canonical(merged, 0.0))

    def __setattr__(self, name, value):
        raise AttributeError("FracField is immutable")

    # -- construction -------------------------------------------------

    @classmethod
    def zero(cls, cube: Cube = UNIT_CUBE) -> "FracField":
        return cls(cube)

    @classmethod
    def constant(cls, value, cube: Cube = UNIT_CUBE) -> "FracField":
        return cls(cube, {(_ZERO, _ZERO, _ZERO): complex(value)})

    @classmethod
    def monomial(cls, coeff, exponents, cube: Cube = UNIT_CUBE) -> "FracField":
        return cls(cube, {tuple(as_exponent(p) for p in exponents): complex(coeff)})

    @classmethod
    def _raw(cls, cube: Cube, terms: dict[Exponents, complex], scale: float) -> "FracField":
        # internal fast path: exponents already canonical Fractions
        f = cls.__new__(cls)
        object.__setattr__(f, "cube", cube)
        object.__setattr__(f, "_terms", _canonical(terms, scale))
        return f

    # -- inspection ----------------------------------------------------

    @property
    def terms(self) -> dict[Exponents, complex]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def max_coeff(self) -> float:
        return max((abs(c) for c in self._terms.values()), default=0.0)

    def exponents_on_axis(self, axis: int) -> set[Fraction]:
        ax = _check_axis(axis)
        return {key[ax] for key in self._terms}

    def __len__(self) -> int:
        return len(self._terms)

    def __repr__(self) -> str:
        if self.is_zero:
            return f"FracField(0 on [{self.cube.a},{self.cube.b}]^3)"
        parts = []
        for key, c in sorted(self._terms.items()):
            factors = "".join(
                f"*(x{n + 1}-a)^{p}" for n, p in enumerate(key) if p != 0
            )
            parts.append(f"({c:.6g}){factors}")
        return "FracField(" + " + ".join(parts) + ")"

    # -- linear structure ----------------------------------------------

    def _require_same_cube(self, other: "FracField"):
        if self.cube != other.cube:
            raise CubeMismatch(
                f"cannot combine fields on [{self.cube.a},{self.cube.b}] "
                f"and [{other.cube.a},{other.cube.b}]"
            )

    def __add__(self, other: "FracField") -> "FracField":
        self._require_same_cube(other)
        merged = dict(self._terms)
        for key, c in other._terms.items():
            s = merged.get(key, 0j) + c
            if s == 0j:
                merged.pop(key, None)
            else:
                merged[key] = s
        # prune against the operand magnitudes so that analytically exact
        # cancellations cannot leave ulp-sized debris behind
        scale = max(self.max_coeff, other.max_coeff)
        return FracField._raw(self.cube, merged, scale)

    def __sub__(self, other: "FracField") -> "FracField":
        return self + (-other)

    def __neg__(self) -> "FracField":
        return FracField._raw(self.cube, {k: -c for k, c in self._terms.items()}, 0.0)

    def __mul__(self, factor) -> "FracField":
        c = complex(factor)
        if c == 0j:
            return FracField.zero(self.cube)
        return FracField._raw(self.cube, {k: c * v for k, v in self._terms.items()}, 0.0)

    __rmul__ = __mul__

    def __truediv__(self, factor) -> "FracField":
        return self * (1.0 / complex(factor))

    # -- fractional calculus --------------------------------------------

    def caputo(self, axis: int, order) -> "FracField":
        """Left Caputo derivative of the given order along one axis.

        Orders in (0, 1] act term-wise as

            c t^p  ->  c * Gamma(p+1)/Gamma(p+1-order) * t^(p-order)

        with constants annihilated.  Orders in (1, 2] additionally send
        p = 1 to zero and require every other exponent to be >= order, the
        exact condition for the result to stay inside the class.
        """
        ax = _check_axis(axis)
        mu = as_order(order)
        if not (0 < mu <= 2):
            raise DomainError(f"derivative order must lie in (0, 2], got {mu}")
        out: dict[Exponents, complex] = {}
        for key, coeff in self._terms.items():
            p = key[ax]
            if p == 0:
                continue
            if mu > 1 and p == 1:
                continue
            if p < mu:
                raise DomainError(
                    f"order-{mu} derivative of exponent {p} on axis {axis} leaves "
                    f"the class (result exponent {p - mu} < 0)"
                )
            ratio = gamma(float(p) + 1.0) / gamma(float(p - mu) + 1.0)
            new_key = key[:ax] + (p - mu,) + key[ax + 1:]
            out[new_key] = coeff * ratio
        return FracField._raw(self.cube, out, 0.0)

    def rl_integral(self, axis: int, order) -> "FracField":
        """Left Riemann-Liouville integral of positive order along one axis:
        c t^p -> c * Gamma(p+1)/Gamma(p+1+order) * t^(p+order)."""
        ax = _check_axis(axis)
        alpha = as_order(order)
        if alpha <= 0:
            raise DomainError(f"integral order must be positive, got {alpha}")
        out: dict[Exponents, complex] = {}
        for key, coeff in self._terms.items():
            p = key[ax]
            ratio = gamma(float(p) + 1.0) / gamma(float(p + alpha) + 1.0)
            new_key = key[:ax] + (p + alpha,) + key[ax + 1:]
            out[new_key] = coeff * ratio
        return FracField._raw(self.cube, out, 0.0)

    def semigroup_admissible(self, axis: int) -> bool:
        """True iff every exponent along the axis is 0 or >= 2.

        Constants are smooth with vanishing first derivative at the base
        point; t^p with p >= 2 is twice continuously differentiable with
        f'(a) = 0.  This is a sufficient (and decidable) condition for the
        composition law of Caputo derivatives on the axis restriction.
        """
        ax = _check_axis(axis)
        return all(key[ax] == 0 or key[ax] >= _TWO for key in self._terms)

    # -- evaluation -----------------------------------------------------

    def eval(self, x) -> complex:
        """Value at a point of the cube (0^0 taken as 1)."""
        if len(x) != 3:
            raise DomainError(f"need a 3-component point, got {x!r}")
        if not self.cube.contains(x):
            raise DomainError(f"point {tuple(x)} outside cube [{self.cube.a},{self.cube.b}]^3")
        shifted = [float(c) - self.cube.a for c in x]
        total = 0j
        for key, coeff in self._terms.items():
            val = coeff
            for t, p in zip(shifted, key):
                if p != 0:
                    val *= t ** float(p)
            total += val
        return total

    def norm_max(self, grid: int = 33) -> float:
        """Max |value| over a uniform tensor grid with `grid` nodes per axis."""
        if grid < 2:
            raise DomainError(f"grid must be at least 2, got {grid}")
        if self.is_zero:
            return 0.0
        t = np.linspace(0.0, self.cube.width, grid)
        acc = np.zeros((grid, grid, grid), dtype=complex)
        for (p1, p2, p3), coeff in self._terms.items():
            v1 = t ** float(p1) if p1 != 0 else np.ones_like(t)
            v2 = t ** float(p2) if p2 != 0 else np.ones_like(t)
            v3 = t ** float(p3) if p3 != 0 else np.ones_like(t)
            acc += coeff * v1[:, None, None] * v2[None, :, None] * v3[None, None, :]
        return float(np.abs(acc).max())

    def restrict(self, axis: int, at) -> dict[Fraction, complex]:
        """1D coefficient profile along `axis` with the other coordinates
        frozen at the values given in the 3-point `at` (its own slot is
        ignored).  Returns {exponent: coefficient}."""
        ax = _check_axis(axis)
        if not self.cube.contains(at):
            raise DomainError(f"restriction point {tuple(at)} outside the cube")
        shifted = [float(c) - self.cube.a for c in at]
        out: dict[Fraction, complex] = {}
        for key, coeff in self._terms.items():
            val = coeff
            for n, p in enumerate(key):
                if n != ax and p != 0:
                    val *= shifted[n] ** float(p)
            if val != 0j:
                out[key[ax]] = out.get(key[ax], 0j) + val
        return out

    # -- serialization ----------------------------------------------------

    def to_dict(self) -> dict:
        terms = []
        for key, c in sorted(self._terms.items()):
            terms.append(
                {
                    "re": c.real,
                    "im": c.imag,
                    "exp": [[p.numerator, p.denominator] for p in key],
                }
            )
        return {"cube": {"a": self.cube.a, "b": self.cube.b}, "terms": terms}

    @classmethod
    def from_dict(cls, data: dict) -> "FracField":
        try:
            cube = Cube(float(data["cube"]["a"]), float(data["cube"]["b"]))
            entries = []
            for term in data["terms"]:
                coeff = complex(float(term["re"]), float(term.get("im", 0.0)))
                exps = tuple(Fraction(int(n), int(d)) for n, d in term["exp"])
                entries.append((exps, coeff))
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed field spec: {exc}") from exc
        return cls(cube, entries)


# -- comparison helpers ----------------------------------------------------


def coeff_distance(f: FracField, g: FracField) -> float:
    """Max absolute coefficient difference over the union of exponent keys."""
    keys = set(f._terms) | set(g._terms)
    return max(
        (abs(f._terms.get(k, 0j) - g._terms.get(k, 0j)) for k in keys),
        default=0.0,
    )


def rel_residual(f: FracField, g: FracField) -> float:
    """coeff_distance normalized by the larger coefficient scale (0 if both zero)."""
    scale = max(f.max_coeff, g.max_coeff)
    if scale == 0.0:
        return 0.0
    return coeff_distance(f, g) / scale
