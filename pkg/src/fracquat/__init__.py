"""Exact fractional vector calculus and biquaternionic analysis on cubes.

The package implements per-axis left Caputo derivatives and
Riemann-Liouville integrals exactly on a closed class of fractional
polynomials, builds the three-parameter gradient/divergence/curl, Dirac
and Laplace operators on top, and mechanically verifies the operator
identities and the displaced-Dirac reformulation of the monochromatic
field system, cross-checked against an independent quadrature oracle.
"""

from .biquaternion import Biquaternion, E1, E2, E3, ONE
from .errors import (
    CubeMismatch,
    DomainError,
    FracQuatError,
    ParameterError,
    ShapeError,
    SingularMedium,
)
from .fracfield import (
    Cube,
    FracField,
    OrderVector,
    UNIT_CUBE,
    as_exponent,
    as_order,
    coeff_distance,
    rel_residual,
)
from .fracvec import (
    BiqField,
    VectorField,
    biq_rel_residual,
    curl,
    dirac_displaced,
    dirac_left,
    dirac_left_direct,
    dirac_right,
    div,
    grad,
    helmholtz,
    laplace,
    laplace_vec,
    vec_rel_residual,
)
from .oracle import SampledFn, compare_axis, kernel_backend, l1_caputo, rl_integral_quad
from .physsys import (
    EMField,
    Medium,
    PhiPsi,
    SourceSet,
    catalog_residual,
    catalog_systems,
    continuity_residual,
    from_phi_psi,
    lame_navier_residual,
    lame_sandwich_residual,
    manufacture_maxwell,
    maxwell_residuals,
    quaternionic_residuals,
    to_phi_psi,
)
from .verify import RunConfig, run_all

__version__ = "0.1.0"

__all__ = [
    "Biquaternion",
    "ONE",
    "E1",
    "E2",
    "E3",
    "Cube",
    "UNIT_CUBE",
    "OrderVector",
    "FracField",
    "VectorField",
    "BiqField",
    "SampledFn",
    "Medium",
    "EMField",
    "SourceSet",
    "PhiPsi",
    "RunConfig",
    "FracQuatError",
    "DomainError",
    "CubeMismatch",
    "ParameterError",
    "ShapeError",
    "SingularMedium",
    "as_exponent",
    "as_order",
    "coeff_distance",
    "rel_residual",
    "biq_rel_residual",
    "vec_rel_residual",
    "grad",
    "div",
    "curl",
    "dirac_left",
    "dirac_left_direct",
    "dirac_right",
    "laplace",
    "laplace_vec",
    "dirac_displaced",
    "helmholtz",
    "l1_caputo",
    "rl_integral_quad",
    "compare_axis",
    "kernel_backend",
    "maxwell_residuals",
    "continuity_residual",
    "manufacture_maxwell",
    "to_phi_psi",
    "from_phi_psi",
    "quaternionic_residuals",
    "lame_navier_residual",
    "lame_sandwich_residual",
    "catalog_residual",
    "catalog_systems",
    "run_all",
]
