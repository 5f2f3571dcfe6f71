"""Physics residual catalog: the fractional monochromatic field system, its
displaced-Dirac reformulation, and the first-order hydrodynamic/elastic
example systems, with manufactured solutions and residual evaluation.

Every system is a residual evaluator, not a solver: given fields, it
returns the left-hand sides of the governing equations as fields in the
closed class, normalized by the size of their constituent terms.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from functools import reduce

from .errors import DomainError, ParameterError, ShapeError, SingularMedium
from .fracfield import Cube, FracField, OrderVector
from .fracvec import (
    BiqField,
    VectorField,
    biq_rel_residual,
    cross_const,
    curl,
    dirac_left,
    dirac_right,
    div,
    dot_const,
    grad,
    laplace_vec,
    scalar_times_const,
)
from .report import EquationRow, ResidualReport


@dataclass(frozen=True)
class Medium:
    """Constant medium: g1, g2, g3 and the oscillation frequency omega.

    The wave number kappa = omega * sqrt(1/(g2 g3)) is derived with the
    branch fixed so that Im kappa >= 0 (and Re kappa >= 0 on the real
    axis); both branches square to omega^2 / (g2 g3).
    """

    g1: complex
    g2: complex
    g3: complex
    omega: complex
    kappa: complex = field(init=False)

    def __post_init__(self):
        for name in ("g1", "g2", "g3", "omega"):
            value = complex(getattr(self, name))
            if not cmath.isfinite(value):
                raise SingularMedium(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)
        if self.omega == 0:
            raise SingularMedium("zero frequency: the monochromatic ansatz needs omega != 0")
        if self.g2 == 0 or self.g3 == 0:
            raise SingularMedium("g2 and g3 must be nonzero (wave number undefined)")
        k = self.omega * cmath.sqrt(1.0 / (self.g2 * self.g3))
        if k.imag < 0 or (k.imag == 0 and k.real < 0):
            k = -k
        object.__setattr__(self, "kappa", k)

    def to_dict(self) -> dict:
        def enc(z: complex):
            return z.real if z.imag == 0 else [z.real, z.imag]

        return {"g1": enc(self.g1), "g2": enc(self.g2), "g3": enc(self.g3), "omega": enc(self.omega)}

    @classmethod
    def from_dict(cls, data: dict) -> "Medium":
        try:
            return cls(*(parse_complex(data[k]) for k in ("g1", "g2", "g3", "omega")))
        except KeyError as exc:
            raise ShapeError(f"medium spec missing {exc}") from exc


def parse_complex(value) -> complex:
    if isinstance(value, (int, float)):
        return complex(value)
    if isinstance(value, (list, tuple)) and len(value) == 2:
        return complex(float(value[0]), float(value[1]))
    raise ShapeError(f"complex values must be a number or [re, im], got {value!r}")


@dataclass(frozen=True)
class EMField:
    """Complex amplitudes of the oscillating field pair."""

    E: VectorField
    B: VectorField

    def __post_init__(self):
        if self.E.cube != self.B.cube:
            raise DomainError("E and B must share one cube")

    @property
    def cube(self) -> Cube:
        return self.E.cube


@dataclass(frozen=True)
class SourceSet:
    """Charge density and current density amplitudes."""

    rho: FracField
    j: VectorField

    def __post_init__(self):
        if self.rho.cube != self.j.cube:
            raise DomainError("rho and j must share one cube")

    @property
    def cube(self) -> Cube:
        return self.rho.cube


@dataclass(frozen=True)
class PhiPsi:
    """The pair of purely vector biquaternionic unknowns."""

    phi: VectorField
    psi: VectorField

    def __post_init__(self):
        if self.phi.cube != self.psi.cube:
            raise DomainError("phi and psi must share one cube")

    @property
    def cube(self) -> Cube:
        return self.phi.cube


@dataclass(frozen=True)
class Equation:
    """One displayed equation: the residual is the sum of signed pieces."""

    name: str
    pieces: tuple

    @property
    def residual(self):
        live = [p for p in self.pieces if not p.is_zero]
        if not live:
            return self.pieces[0] * 0
        return reduce(lambda a, b: a + b, live)

    def relative_norm(self, grid: int = 33) -> float:
        scale = max(p.norm_max(grid) for p in self.pieces)
        if scale == 0.0:
            return 0.0
        return self.residual.norm_max(grid) / scale

    def relative_coeff(self) -> float:
        scale = max(p.max_coeff for p in self.pieces)
        if scale == 0.0:
            return 0.0
        return self.residual.max_coeff / scale


# -- monochromatic field system ---------------------------------------------


def maxwell_equations(em: EMField, src: SourceSet, medium: Medium, order: OrderVector) -> list[Equation]:
    """The four governing equations for the complex amplitudes."""
    iw = 1j * medium.omega
    return [
        Equation("div_e", (div(em.E, order), src.rho * (-medium.g1))),
        Equation("faraday", (curl(em.E, order), em.B * (-iw))),
        Equation("div_b", (div(em.B, order),)),
        Equation(
            "ampere",
            (
                curl(em.B, order),
                em.E * (iw / (medium.g2 * medium.g3)),
                src.j * (-1.0 / medium.g2),
            ),
        ),
    ]


def maxwell_residuals(em: EMField, src: SourceSet, medium: Medium, order: OrderVector):
    """Residual fields of the four equations, in display order."""
    return tuple(eq.residual for eq in maxwell_equations(em, src, medium, order))


def continuity_equation(src: SourceSet, medium: Medium, order: OrderVector) -> Equation:
    coeff = -1j * medium.omega * medium.g1 / medium.g3
    return Equation("continuity", (div(src.j, order), src.rho * coeff))


def continuity_residual(src: SourceSet, medium: Medium, order: OrderVector) -> FracField:
    """Div j - i omega rho g1 / g3: vanishes for consistent sources."""
    return continuity_equation(src, medium, order).residual


def manufacture_maxwell(e_seed: VectorField, medium: Medium, order: OrderVector) -> tuple[EMField, SourceSet]:
    """Exact solution by construction: choose E, then define B, rho, j so
    that all four equations (and source continuity) hold identically.

    Needs components of the seed differentiable twice per axis, i.e.
    exponents in {0} or [2, inf).
    """
    if medium.g1 == 0:
        raise SingularMedium("g1 = 0 leaves the charge density undefined")
    iw = 1j * medium.omega
    b = curl(e_seed, order) * (1.0 / iw)
    rho = div(e_seed, order) * (1.0 / medium.g1)
    j = curl(b, order) * medium.g2 + e_seed * (iw / medium.g3)
    return EMField(e_seed, b), SourceSet(rho, j)


# -- displaced-Dirac reformulation --------------------------------------------


def to_phi_psi(em: EMField, medium: Medium) -> PhiPsi:
    """phi = -i w (g2 g3)^-1 E + kappa B, psi = +i w (g2 g3)^-1 E + kappa B."""
    c = 1j * medium.omega / (medium.g2 * medium.g3)
    kb = em.B * medium.kappa
    return PhiPsi(em.E * (-c) + kb, em.E * c + kb)


def from_phi_psi(pp: PhiPsi, medium: Medium) -> EMField:
    """Invert the 2x2 system defining (phi, psi); needs omega, kappa != 0."""
    if medium.omega == 0 or medium.kappa == 0:
        raise SingularMedium("phi/psi inversion needs omega != 0 and kappa != 0")
    e = (pp.psi - pp.phi) * (medium.g2 * medium.g3 / (2j * medium.omega))
    b = (pp.phi + pp.psi) * (1.0 / (2.0 * medium.kappa))
    return EMField(e, b)


def quaternionic_equations(pp: PhiPsi, src: SourceSet, medium: Medium, order: OrderVector) -> list[Equation]:
    """Residuals of the displaced-Dirac pair:

        (D - kappa) phi = g2^-1 (Div j + kappa j)
        (D + kappa) psi = g2^-1 (-Div j + kappa j)

    Both sides are full biquaternion fields: the right-hand sides mix the
    scalar Div j with the vector kappa j.
    """
    k = medium.kappa
    g2inv = 1.0 / medium.g2
    divj = div(src.j, order)
    phi_b = BiqField.from_vector(pp.phi)
    psi_b = BiqField.from_vector(pp.psi)
    rhs_phi = BiqField(divj * g2inv, src.j * (k * g2inv))
    rhs_psi = BiqField(divj * (-g2inv), src.j * (k * g2inv))
    return [
        Equation("phi_displaced", (dirac_left(phi_b, order), phi_b * (-k), -rhs_phi)),
        Equation("psi_displaced", (dirac_left(psi_b, order), psi_b * k, -rhs_psi)),
    ]


def quaternionic_residuals(pp: PhiPsi, src: SourceSet, medium: Medium, order: OrderVector) -> tuple[BiqField, BiqField]:
    eq_phi, eq_psi = quaternionic_equations(pp, src, medium, order)
    return eq_phi.residual, eq_psi.residual


def quaternionic_from_maxwell_parts(em: EMField, src: SourceSet, medium: Medium, order: OrderVector) -> tuple[BiqField, BiqField]:
    """Assemble the displaced-Dirac residuals out of the four field-equation
    residuals plus continuity, following the substitution chain of the
    equivalence argument.  Agreement with `quaternionic_residuals` on
    arbitrary (non-solution) fields checks the argument itself.
    """
    r1, r2, r3, r4 = maxwell_residuals(em, src, medium, order)
    cont = continuity_residual(src, medium, order)
    ilam = 1j * medium.omega / (medium.g2 * medium.g3)
    k = medium.kappa
    g2inv = 1.0 / medium.g2
    r_phi = BiqField(r1 * ilam + r3 * (-k) + cont * (-g2inv), r2 * (-ilam) + r4 * k)
    r_psi = BiqField(r1 * (-ilam) + r3 * (-k) + cont * g2inv, r2 * ilam + r4 * k)
    return r_phi, r_psi


def helmholtz_em_equations(em: EMField, medium: Medium, order: OrderVector) -> list[Equation]:
    """Source-free second-order reduction: (omega^2/nu^2) F - Laplace F
    for both amplitudes, with nu^2 = g2 g3."""
    c = medium.omega * medium.omega / (medium.g2 * medium.g3)
    return [
        Equation("helmholtz_b", (em.B * c, -laplace_vec(em.B, order))),
        Equation("helmholtz_e", (em.E * c, -laplace_vec(em.E, order))),
    ]


def helmholtz_em_residuals(em: EMField, medium: Medium, order: OrderVector) -> tuple[VectorField, VectorField]:
    eqs = helmholtz_em_equations(em, medium, order)
    return eqs[0].residual, eqs[1].residual


# -- elasticity ----------------------------------------------------------------


def _check_lame(lam: float, mu: float) -> None:
    if not (mu > 0 and lam > -2.0 * mu / 3.0):
        raise ParameterError(
            f"Lame coefficients need mu > 0 and lambda > -2mu/3, got lambda={lam}, mu={mu}"
        )


def lame_navier_residual(U: VectorField, lam: float, mu: float, order: OrderVector, *, check_parameters: bool = True) -> VectorField:
    """mu * Laplace U + (mu + lambda) * Grad(Div U)."""
    if check_parameters:
        _check_lame(lam, mu)
    return laplace_vec(U, order) * mu + grad(div(U, order), order) * (mu + lam)


def lame_sandwich_residual(U: VectorField, lam: float, mu: float, order: OrderVector, *, check_parameters: bool = True) -> VectorField:
    """gamma * (D U) D + beta * D(D U) with gamma = (mu+lambda)/2 and
    beta = (3mu+lambda)/2; equals minus the Grad/Div form on admissible
    fields.  The scalar part cancels identically and is discarded."""
    if check_parameters:
        _check_lame(lam, mu)
    gamma_c = 0.5 * (mu + lam)
    beta_c = 0.5 * (3.0 * mu + lam)
    du = dirac_left(BiqField.from_vector(U), order)
    total = dirac_right(du, order) * gamma_c + dirac_left(du, order) * beta_c
    return total.vec


def sandwich_reading_residual(U: VectorField, order: OrderVector) -> float:
    """Relative gap between the two bracketings of D U D."""
    ub = BiqField.from_vector(U)
    left_first = dirac_right(dirac_left(ub, order), order)
    right_first = dirac_left(dirac_right(ub, order), order)
    return biq_rel_residual(left_first, right_first)


def grad_div_decomposition_check(U: VectorField, order: OrderVector) -> float:
    """Max relative residual of the three second-order decompositions:

        D^2 U           = -Grad Div U + Curl Curl U
        D U D           = -Grad Div U - Curl Curl U
        Grad Div U      = -(D^2 U + D U D) / 2
    """
    ub = BiqField.from_vector(U)
    du = dirac_left(ub, order)
    ddu = dirac_left(du, order)
    dud = dirac_right(du, order)
    gd = BiqField.from_vector(grad(div(U, order), order))
    cc = BiqField.from_vector(curl(curl(U, order), order))
    return max(
        biq_rel_residual(ddu, -gd + cc),
        biq_rel_residual(dud, -gd - cc),
        biq_rel_residual(gd, (ddu + dud) * -0.5),
    )


# -- first-order example systems -------------------------------------------------


def first_order_system_equations(phi: VectorField, psi0: FracField, a_vec, b_vec, order: OrderVector) -> list[Equation]:
    """The general constrained div/curl pair:

        Grad psi0 + Curl phi + (b x phi) + psi0 a = 0
        Div phi + a . phi = 0

    with constant real triples a, b.
    """
    return [
        Equation(
            "vector",
            (
                grad(psi0, order),
                curl(phi, order),
                cross_const(b_vec, phi),
                scalar_times_const(psi0, a_vec),
            ),
        ),
        Equation("scalar", (div(phi, order), dot_const(a_vec, phi))),
    ]


_ZERO3 = (0.0, 0.0, 0.0)


def catalog_equations(system: str, payload: dict, order: OrderVector, medium: Medium | None = None) -> list[Equation]:
    """Equations of a named system, given its field payload.

    The flow systems are evaluated as the particular cases of the general
    div/curl pair they reduce to, with derived quantities (vorticity,
    effective pressure) assembled from the supplied velocity/pressure.
    """

    def need(*keys):
        missing = [k for k in keys if k not in payload]
        if missing:
            raise ShapeError(f"system '{system}' needs field slots {missing}")
        return [payload[k] for k in keys]

    if system == "maxwell":
        if medium is None:
            raise ShapeError("system 'maxwell' needs a medium")
        em, src = need("em", "sources")
        return maxwell_equations(em, src, medium, order) + [
            continuity_equation(src, medium, order)
        ]
    if system == "moisil_teodorescu":
        phi, psi0 = need("Phi", "Psi0")
        return [
            Equation("vector", (curl(phi, order), grad(psi0, order))),
            Equation("scalar", (div(phi, order),)),
        ]
    if system == "generalized_mt":
        phi, psi0, a_vec, b_vec = need("Phi", "Psi0", "A", "B")
        return first_order_system_equations(phi, psi0, a_vec, b_vec, order)
    if system == "ideal_fluid":
        (theta,) = need("Theta")
        return [
            Equation("curl_free", (curl(theta, order),)),
            Equation("div_free", (div(theta, order),)),
        ]
    if system == "stokes":
        vort, p0, mu0 = need("Lambda", "P0", "mu0")
        return first_order_system_equations(vort * float(mu0), p0, _ZERO3, _ZERO3, order)
    if system == "oseen_form1":
        theta, p0, mu0, rho0, v = need("Theta", "P0", "mu0", "rho0", "V")
        vort = curl(theta, order)
        phi = vort * float(mu0) + cross_const(v, theta) * float(rho0)
        return first_order_system_equations(phi, p0, _ZERO3, _ZERO3, order)
    if system == "oseen_form2":
        theta, p0, mu0, rho0, v = need("Theta", "P0", "mu0", "rho0", "V")
        vort = curl(theta, order)
        psi0 = p0 - dot_const(v, theta) * float(rho0)
        b_vec = tuple(float(rho0) * float(c) / float(mu0) for c in v)
        return first_order_system_equations(vort * float(mu0), psi0, _ZERO3, b_vec, order)
    raise ShapeError(f"unknown system {system!r}; see catalog_systems()")


def catalog_systems() -> tuple[str, ...]:
    return (
        "maxwell",
        "moisil_teodorescu",
        "generalized_mt",
        "ideal_fluid",
        "stokes",
        "oseen_form1",
        "oseen_form2",
    )


def catalog_residual(
    system: str,
    payload: dict,
    order: OrderVector,
    *,
    medium: Medium | None = None,
    tolerance: float = 1e-9,
    grid: int = 33,
    metadata: dict | None = None,
) -> ResidualReport:
    """Evaluate a named system and package per-equation relative residuals."""
    equations = catalog_equations(system, payload, order, medium)
    rows = []
    for eq in equations:
        res = eq.relative_norm(grid)
        rows.append(EquationRow(eq.name, res, tolerance, res <= tolerance))
    meta = {"orders": [str(a) for a in order.alphas]}
    if medium is not None:
        meta["medium"] = medium.to_dict()
    if metadata:
        meta.update(metadata)
    return ResidualReport(
        system=system,
        rows=tuple(rows),
        tolerance=tolerance,
        passed=all(r.passed for r in rows),
        metadata=meta,
    )


# -- named-slot JSON payloads -----------------------------------------------------


def _field_from(data, path: str) -> FracField:
    if not isinstance(data, dict):
        raise ShapeError(f"{path}: expected a field object, got {type(data).__name__}")
    try:
        return FracField.from_dict(data)
    except DomainError as exc:
        raise ShapeError(f"{path}: {exc}") from exc


def _vector_from(data, path: str) -> VectorField:
    if not isinstance(data, list) or len(data) != 3:
        raise ShapeError(f"{path}: expected a list of 3 field objects")
    return VectorField(*(_field_from(c, f"{path}[{i}]") for i, c in enumerate(data)))


def _triple_from(data, path: str) -> tuple[float, float, float]:
    if not isinstance(data, list) or len(data) != 3:
        raise ShapeError(f"{path}: expected a list of 3 numbers")
    return tuple(float(c) for c in data)


_SYSTEM_SLOTS = {
    "moisil_teodorescu": {"Phi": _vector_from, "Psi0": _field_from},
    "generalized_mt": {
        "Phi": _vector_from,
        "Psi0": _field_from,
        "A": _triple_from,
        "B": _triple_from,
    },
    "ideal_fluid": {"Theta": _vector_from},
    "stokes": {"Lambda": _vector_from, "P0": _field_from, "mu0": lambda d, p: float(d)},
    "oseen_form1": {
        "Theta": _vector_from,
        "P0": _field_from,
        "mu0": lambda d, p: float(d),
        "rho0": lambda d, p: float(d),
        "V": _triple_from,
    },
}
_SYSTEM_SLOTS["oseen_form2"] = _SYSTEM_SLOTS["oseen_form1"]


def parse_payload(system: str, data: dict) -> dict:
    """Parse the named-slot JSON for a catalog system into field objects.

    For 'maxwell' the slots are E, B, rho, j (vector slots are 3-element
    lists of field specs); optional 'medium' and 'orders' entries override
    the run configuration when present.
    """
    if not isinstance(data, dict):
        raise ShapeError("payload must be a JSON object")
    if system == "maxwell":
        for slot in ("E", "B", "rho", "j"):
            if slot not in data:
                raise ShapeError(f"system 'maxwell' needs field slot '{slot}'")
        em = EMField(_vector_from(data["E"], "E"), _vector_from(data["B"], "B"))
        src = SourceSet(_field_from(data["rho"], "rho"), _vector_from(data["j"], "j"))
        payload = {"em": em, "sources": src}
        if "medium" in data:
            payload["medium"] = Medium.from_dict(data["medium"])
        if "orders" in data:
            payload["orders"] = orders_from_json(data["orders"])
        return payload
    slots = _SYSTEM_SLOTS.get(system)
    if slots is None:
        raise ShapeError(f"unknown system {system!r}; see catalog_systems()")
    payload = {}
    for name, parser in slots.items():
        if name not in data:
            raise ShapeError(f"system '{system}' needs field slot '{name}'")
        payload[name] = parser(data[name], name)
    return payload


def orders_from_json(data) -> OrderVector:
    if not isinstance(data, list) or len(data) != 3:
        raise ShapeError("orders must be a list of 3 exact rationals")
    try:
        return OrderVector.of(*(tuple(v) if isinstance(v, list) else v for v in data))
    except DomainError as exc:
        raise ShapeError(str(exc)) from exc


def maxwell_payload_to_json(em: EMField, src: SourceSet, medium: Medium, order: OrderVector, seed: int | None = None) -> dict:
    out = {
        "E": [c.to_dict() for c in em.E.components],
        "B": [c.to_dict() for c in em.B.components],
        "rho": src.rho.to_dict(),
        "j": [c.to_dict() for c in src.j.components],
        "medium": medium.to_dict(),
        "orders": [[a.numerator, a.denominator] for a in order.alphas],
    }
    if seed is not None:
        out["seed"] = seed
    return out
