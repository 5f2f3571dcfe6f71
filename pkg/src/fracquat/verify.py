"""Identity suites: every claim the package asserts, run as one battery.

Each suite emits rows (suite, anchor, residual, tolerance, pass).  Identity
rows compare two evaluation paths and pass when the relative residual is
below the configured tolerance.  Guard rows check that a hypothesis is
actually load-bearing: they pass when the identity visibly *fails* (residual
at least the stated floor) once the hypothesis is dropped, and their
left-hand sides are evaluated by quadrature because the singular results
fall outside the closed symbolic class.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

import numpy as np

from .errors import DomainError, ShapeError
from .fracfield import Cube, FracField, OrderVector, rel_residual
from .fracvec import (
    BiqField,
    VectorField,
    biq_rel_residual,
    curl,
    dirac_decomposition_exact,
    dirac_left,
    dirac_left_direct,
    div,
    div_curl_field,
    factorization_residual,
    grad,
    helmholtz_factorization_residual,
    laplace,
    vec_rel_residual,
)
from . import classical
from .oracle import EDGE_FRACTION, SampledFn, compare_axis, l1_caputo
from .physsys import (
    EMField,
    Medium,
    SourceSet,
    continuity_equation,
    grad_div_decomposition_check,
    lame_navier_residual,
    lame_sandwich_residual,
    manufacture_maxwell,
    maxwell_equations,
    orders_from_json,
    quaternionic_equations,
    quaternionic_from_maxwell_parts,
    quaternionic_residuals,
    sandwich_reading_residual,
    to_phi_psi,
    from_phi_psi,
)
from .report import SuiteRow
from .sampling import (
    ADMISSIBLE_EXPONENTS,
    LOOSE_EXPONENTS,
    random_axis_field,
    random_biq,
    random_field,
    random_order_vector,
    random_vector,
)

ORACLE_TOLERANCE = 1e-3
ORACLE_RATIO_FLOOR = 1.8
GUARD_FLOOR = 1e-3

FACTORIZATION_ORDER_SETS = (
    ("1/2", "1/2", "1/2"),
    ("1/4", "3/4", "1"),
    ("1", "1", "1"),
)

HELMHOLTZ_WAVE_NUMBERS = (1 + 0j, 1j, 2 + 3j)

LAME_PARAMETERS = ((1.0, 1.0), (-0.5, 1.0), (0.0, 2.0))


@dataclass(frozen=True)
class RunConfig:
    """Everything a verification run depends on."""

    orders: OrderVector = dc_field(default_factory=lambda: OrderVector.of("1/2", "1/2", "1/2"))
    medium: Medium = dc_field(default_factory=lambda: Medium(1.0, 2.0, 3.0, 1.0))
    cube: Cube = dc_field(default_factory=lambda: Cube(0.0, 1.0))
    tolerance: float = 1e-9
    seed: int = 42
    grid: int = 33
    oracle_n: int = 4096
    format: str = "json"

    def __post_init__(self):
        if self.tolerance <= 0:
            raise ShapeError(f"tolerance must be positive, got {self.tolerance}")
        if self.grid < 2:
            raise ShapeError(f"grid must be at least 2, got {self.grid}")
        if self.oracle_n < 8:
            raise ShapeError(f"oracle N must be at least 8, got {self.oracle_n}")
        if self.format not in ("json", "csv"):
            raise ShapeError(f"format must be 'json' or 'csv', got {self.format!r}")

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        if not isinstance(data, dict):
            raise ShapeError("config must be a JSON object")
        known = {"orders", "medium", "cube", "tolerance", "seed", "grid", "oracle_n", "format"}
        unknown = set(data) - known
        if unknown:
            raise ShapeError(f"unknown config keys {sorted(unknown)}")
        kwargs = {}
        if "orders" in data:
            kwargs["orders"] = orders_from_json(data["orders"])
        if "medium" in data:
            kwargs["medium"] = Medium.from_dict(data["medium"])
        if "cube" in data:
            try:
                kwargs["cube"] = Cube(float(data["cube"]["a"]), float(data["cube"]["b"]))
            except (KeyError, TypeError, ValueError, DomainError) as exc:
                raise ShapeError(f"bad cube spec: {exc}") from exc
        for key in ("tolerance", "seed", "grid", "oracle_n"):
            if key in data:
                kwargs[key] = (float if key == "tolerance" else int)(data[key])
        if "format" in data:
            kwargs["format"] = str(data["format"])
        return cls(**kwargs)

    def meta(self) -> dict:
        return {
            "orders": [str(a) for a in self.orders.alphas],
            "medium": self.medium.to_dict(),
            "cube": {"a": self.cube.a, "b": self.cube.b},
            "tolerance": self.tolerance,
            "seed": self.seed,
            "grid": self.grid,
            "oracle_n": self.oracle_n,
            "format": self.format,
        }

    def rng(self, salt: int = 0) -> random.Random:
        return random.Random(f"{self.seed}:{salt}")


def _row(suite: str, anchor: str, residual: float, tolerance: float, passed=None) -> SuiteRow:
    if passed is None:
        passed = residual <= tolerance
    return SuiteRow(suite, anchor, float(residual), float(tolerance), bool(passed))


# -- composition of Caputo derivatives ----------------------------------------


def semigroup_pairs() -> list[tuple[Fraction, Fraction]]:
    menu = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1))
    return [(m1, m2) for m1 in menu for m2 in menu if m1 + m2 > 1]


def semigroup_residual(f: FracField, axis: int, mu1, mu2) -> float:
    composed = f.caputo(axis, mu2).caputo(axis, mu1)
    direct = f.caputo(axis, Fraction(mu1) + Fraction(mu2))
    return rel_residual(composed, direct)


def semigroup_counterexample_residual(cube: Cube, n: int) -> float:
    """Composed half-order derivatives of f(x) = x - a, orders 3/4 each.

    The composition produces a function singular at the base point, which
    the summed-order derivative (identically zero) cannot match, so the
    composition law fails without the flat-start hypothesis.  Evaluated by
    running the quadrature scheme twice; the true composed value is
    (x - a)^(-1/2) / Gamma(1/2).
    """
    x = np.linspace(cube.a, cube.b, n + 1)
    samples = SampledFn(cube.a, cube.b, (x - cube.a).astype(complex))
    composed = l1_caputo(l1_caputo(samples, 0.75), 0.75)
    keep = (x - cube.a) >= EDGE_FRACTION * cube.width
    # direct derivative of summed order 3/2 annihilates x - a
    return float(np.abs(composed.values[keep]).max())


def suite_semigroup(cfg: RunConfig, fields: int = 30) -> list[SuiteRow]:
    rng = cfg.rng(1)
    pairs = semigroup_pairs()
    worst = 0.0
    for i in range(fields):
        axis = i % 3 + 1
        f = random_axis_field(rng, axis=axis, cube=cfg.cube)
        for mu1, mu2 in pairs:
            worst = max(worst, semigroup_residual(f, axis, mu1, mu2))
    guard = semigroup_counterexample_residual(cfg.cube, min(cfg.oracle_n, 2048))
    return [
        _row("fracfield", "caputo-semigroup", worst, cfg.tolerance),
        _row("fracfield", "caputo-semigroup-guard", guard, GUARD_FLOOR, passed=guard >= GUARD_FLOOR),
    ]


# -- closed forms vs quadrature -------------------------------------------------


def suite_oracle(cfg: RunConfig, fields: int = 3) -> list[SuiteRow]:
    rng = cfg.rng(2)
    pool = tuple(p for p in ADMISSIBLE_EXPONENTS if p != 0)
    cases = []
    for i in range(fields):
        axis = i % 3 + 1
        cases.append((random_axis_field(rng, axis=axis, cube=cfg.cube, pool=pool, positive=True, max_terms=2), axis))
    worst_caputo = 0.0
    worst_rl = 0.0
    worst_ratio = float("inf")
    for f, axis in cases:
        for mu in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)):
            err_n = compare_axis(f, axis, "caputo", mu, cfg.oracle_n)
            err_2n = compare_axis(f, axis, "caputo", mu, 2 * cfg.oracle_n)
            worst_caputo = max(worst_caputo, err_n)
            worst_ratio = min(worst_ratio, err_n / err_2n if err_2n > 0 else float("inf"))
        worst_rl = max(worst_rl, compare_axis(f, axis, "rl", Fraction(1, 2), cfg.oracle_n))
    return [
        _row("caputo_oracle", "caputo-closed-form-agreement", worst_caputo, ORACLE_TOLERANCE),
        _row("caputo_oracle", "rl-closed-form-agreement", worst_rl, ORACLE_TOLERANCE),
        _row(
            "caputo_oracle",
            "grid-convergence-ratio",
            worst_ratio,
            ORACLE_RATIO_FLOOR,
            passed=worst_ratio >= ORACLE_RATIO_FLOOR,
        ),
    ]


# -- vector calculus ---------------------------------------------------------------


def suite_div_curl(cfg: RunConfig, fields: int = 30) -> list[SuiteRow]:
    rng = cfg.rng(3)
    worst = 0.0
    clean = True
    for _ in range(fields):
        u = random_vector(rng, cfg.cube, pool=LOOSE_EXPONENTS)
        order = random_order_vector(rng)
        leftover = div_curl_field(u, order)
        clean = clean and leftover.is_zero
        scale = max(u.max_coeff, 1.0)
        worst = max(worst, leftover.max_coeff / scale)
    return [_row("fracvec", "div-curl-annihilation", worst, 0.0, passed=clean)]


def factorization_guard_residual(cube: Cube, n: int) -> float:
    """Twice the half-order Dirac derivative of the linear profile x1 - a
    (orders 3/4): the surviving e1 component is singular at the base point
    while the Laplace side vanishes.  Quadrature evaluation, kept nodes."""
    x = np.linspace(cube.a, cube.b, n + 1)
    samples = SampledFn(cube.a, cube.b, (x - cube.a).astype(complex))
    composed = l1_caputo(l1_caputo(samples, 0.75), 0.75)
    keep = (x - cube.a) >= EDGE_FRACTION * cube.width
    return float(np.abs(composed.values[keep]).max())


def suite_factorization(cfg: RunConfig, fields: int = 10) -> list[SuiteRow]:
    rng = cfg.rng(4)
    worst = 0.0
    for order_spec in FACTORIZATION_ORDER_SETS:
        order = OrderVector.of(*order_spec)
        for _ in range(fields):
            u = random_biq(rng, cfg.cube)
            worst = max(worst, factorization_residual(u, order))
    bad = BiqField.from_vector(
        VectorField(
            FracField.monomial(1.0, (1, 0, 0), cfg.cube),
            FracField.zero(cfg.cube),
            FracField.zero(cfg.cube),
        )
    )
    order = OrderVector.of("1/2", "1/2", "1/2")
    try:
        dirac_left(dirac_left(bad, order), order)
        raises = False
    except DomainError:
        raises = True
    guard = factorization_guard_residual(cfg.cube, min(cfg.oracle_n, 2048))
    guard_floor = GUARD_FLOOR * bad.norm_max(cfg.grid)
    return [
        _row("fracvec", "dirac-factorization", worst, cfg.tolerance),
        _row(
            "fracvec",
            "dirac-factorization-guard",
            guard,
            guard_floor,
            passed=raises and guard >= guard_floor,
        ),
    ]


def suite_decomposition(cfg: RunConfig, fields: int = 20) -> list[SuiteRow]:
    rng = cfg.rng(5)
    exact = True
    worst_direct = 0.0
    for _ in range(fields):
        u = random_biq(rng, cfg.cube, pool=LOOSE_EXPONENTS)
        order = random_order_vector(rng)
        exact = exact and dirac_decomposition_exact(u, order)
        worst_direct = max(
            worst_direct,
            biq_rel_residual(dirac_left(u, order), dirac_left_direct(u, order)),
        )
    return [
        _row("fracvec", "dirac-decomposition", 0.0 if exact else 1.0, 0.0, passed=exact),
        _row("fracvec", "dirac-two-paths", worst_direct, cfg.tolerance),
    ]


def suite_helmholtz(cfg: RunConfig, fields: int = 10) -> list[SuiteRow]:
    rng = cfg.rng(6)
    worst = 0.0
    for kappa in HELMHOLTZ_WAVE_NUMBERS:
        for _ in range(fields):
            u = random_biq(rng, cfg.cube)
            worst = max(worst, helmholtz_factorization_residual(u, cfg.orders, kappa))
    return [_row("fracvec", "helmholtz-factorization", worst, cfg.tolerance)]


# -- monochromatic system ------------------------------------------------------------


def suite_maxwell(cfg: RunConfig, fields: int = 10) -> list[SuiteRow]:
    rng = cfg.rng(7)
    worst_forward = 0.0
    worst_reverse = 0.0
    worst_continuity = 0.0
    for _ in range(fields):
        seed_field = random_vector(rng, cfg.cube)
        em, src = manufacture_maxwell(seed_field, cfg.medium, cfg.orders)
        pp = to_phi_psi(em, cfg.medium)
        for eq in quaternionic_equations(pp, src, cfg.medium, cfg.orders):
            worst_forward = max(worst_forward, eq.relative_coeff())
        em_back = from_phi_psi(pp, cfg.medium)
        for eq in maxwell_equations(em_back, src, cfg.medium, cfg.orders):
            worst_reverse = max(worst_reverse, eq.relative_coeff())
        worst_continuity = max(
            worst_continuity, continuity_equation(src, cfg.medium, cfg.orders).relative_coeff()
        )
    worst_algebraic = 0.0
    for _ in range(fields):
        em = EMField(random_vector(rng, cfg.cube), random_vector(rng, cfg.cube))
        src = SourceSet(random_field(rng, cfg.cube), random_vector(rng, cfg.cube))
        pp = to_phi_psi(em, cfg.medium)
        direct = quaternionic_residuals(pp, src, cfg.medium, cfg.orders)
        assembled = quaternionic_from_maxwell_parts(em, src, cfg.medium, cfg.orders)
        worst_algebraic = max(
            worst_algebraic,
            biq_rel_residual(direct[0], assembled[0]),
            biq_rel_residual(direct[1], assembled[1]),
        )
    return [
        _row("physsys", "maxwell-equivalence-forward", worst_forward, cfg.tolerance),
        _row("physsys", "maxwell-equivalence-reverse", worst_reverse, cfg.tolerance),
        _row("physsys", "maxwell-equivalence-algebraic", worst_algebraic, cfg.tolerance),
        _row("physsys", "charge-continuity", worst_continuity, cfg.tolerance),
    ]


def suite_medium_branch(cfg: RunConfig) -> list[SuiteRow]:
    m = cfg.medium
    variants = [
        m,
        Medium(m.g1, -m.g2, m.g3, m.omega),
        Medium(m.g1, m.g2, m.g3, m.omega * (0.5 + 2j)),
        Medium(m.g1, m.g2 * 1j, m.g3, m.omega),
    ]
    worst = 0.0
    branch_ok = True
    for v in variants:
        target = v.omega * v.omega / (v.g2 * v.g3)
        worst = max(worst, abs(v.kappa * v.kappa - target) / abs(target))
        branch_ok = branch_ok and (
            v.kappa.imag > 0 or (v.kappa.imag == 0 and v.kappa.real >= 0)
        )
    return [_row("physsys", "medium-wave-number-branch", worst, cfg.tolerance, passed=branch_ok and worst <= cfg.tolerance)]


# -- elasticity -------------------------------------------------------------------------


def suite_lame(cfg: RunConfig, fields: int = 7) -> list[SuiteRow]:
    rng = cfg.rng(8)
    worst_two_path = 0.0
    worst_readings = 0.0
    worst_graddiv = 0.0
    for lam, mu in LAME_PARAMETERS:
        for _ in range(fields):
            u = random_vector(rng, cfg.cube)
            lhs = lame_navier_residual(u, lam, mu, cfg.orders)
            rhs = -lame_sandwich_residual(u, lam, mu, cfg.orders)
            worst_two_path = max(worst_two_path, vec_rel_residual(lhs, rhs))
    for _ in range(fields):
        u = random_vector(rng, cfg.cube)
        worst_readings = max(worst_readings, sandwich_reading_residual(u, cfg.orders))
        worst_graddiv = max(worst_graddiv, grad_div_decomposition_check(u, cfg.orders))
    return [
        _row("physsys", "lame-two-path", worst_two_path, cfg.tolerance),
        _row("physsys", "lame-sandwich-readings", worst_readings, cfg.tolerance),
        _row("physsys", "grad-div-decomposition", worst_graddiv, cfg.tolerance),
    ]


# -- classical reduction ----------------------------------------------------------------


def classical_reduction_residual(cfg: RunConfig, fields: int = 10) -> float:
    """Fractional operators at orders (1,1,1) against the elementary
    integer-order implementations, on integer-exponent fields."""
    rng = cfg.rng(9)
    order = OrderVector.of(1, 1, 1)
    pool = (Fraction(0), Fraction(2), Fraction(3), Fraction(4))
    worst = 0.0
    for _ in range(fields):
        u = random_biq(rng, cfg.cube, pool=pool)
        worst = max(
            worst,
            rel_residual(div(u.u, order), classical.div(u.u)),
            vec_rel_residual(grad(u.u0, order), classical.grad(u.u0)),
            vec_rel_residual(curl(u.u, order), classical.curl(u.u)),
            biq_rel_residual(dirac_left(u, order), classical.dirac_left(u)),
            biq_rel_residual(laplace(u, order), classical.laplace(u)),
        )
    return worst


def suite_classical(cfg: RunConfig) -> list[SuiteRow]:
    if not cfg.orders.is_classical:
        return []
    worst = classical_reduction_residual(cfg)
    return [_row("fracvec", "classical-reduction", worst, cfg.tolerance)]


def run_all(cfg: RunConfig) -> list[SuiteRow]:
    rows: list[SuiteRow] = []
    rows += suite_semigroup(cfg)
    rows += suite_oracle(cfg)
    rows += suite_div_curl(cfg)
    rows += suite_factorization(cfg)
    rows += suite_decomposition(cfg)
    rows += suite_helmholtz(cfg)
    rows += suite_maxwell(cfg)
    rows += suite_medium_branch(cfg)
    rows += suite_lame(cfg)
    rows += suite_classical(cfg)
    return sorted(rows, key=lambda r: (r.suite, r.anchor))
