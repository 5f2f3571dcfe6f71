import math
from fractions import Fraction as F

import pytest

from fracquat import (
    BiqField,
    Cube,
    EMField,
    FracField,
    Medium,
    PhiPsi,
    SourceSet,
    VectorField,
    biq_rel_residual,
    continuity_residual,
    from_phi_psi,
    lame_navier_residual,
    lame_sandwich_residual,
    manufacture_maxwell,
    maxwell_residuals,
    quaternionic_residuals,
    rel_residual,
    to_phi_psi,
    vec_rel_residual,
)
from fracquat.errors import DomainError, ParameterError, SingularMedium
from fracquat.physsys import (
    continuity_equation,
    grad_div_decomposition_check,
    maxwell_equations,
    quaternionic_equations,
    quaternionic_from_maxwell_parts,
    sandwich_reading_residual,
)
from fracquat.sampling import random_field, random_vector

CUBE = Cube(0.0, 1.0)


def mono(coeff, exps, cube=CUBE):
    return FracField.monomial(coeff, exps, cube)


def zero_vec(cube=CUBE):
    return VectorField.zero(cube)


def zero_em(cube=CUBE):
    return EMField(zero_vec(cube), zero_vec(cube))


def zero_src(cube=CUBE):
    return SourceSet(FracField.zero(cube), zero_vec(cube))


# -- medium -------------------------------------------------------------------------


def test_wave_number_branch_upper_half_plane():
    for g2, g3, omega in [
        (2.0, 3.0, 1.0),
        (-2.0, 3.0, 1.0),
        (2.0, 3.0, 2 - 1j),
        (1j, 1.0, 1.0),
        (-1.0, -1.0, 0.5),
    ]:
        m = Medium(1.0, g2, g3, omega)
        assert m.kappa.imag > 0 or (m.kappa.imag == 0 and m.kappa.real >= 0)
        target = omega * omega / complex(g2 * g3)
        assert abs(m.kappa**2 - target) <= 1e-12 * abs(target)


def test_flipping_g2_flips_branch_consistently():
    m1 = Medium(1.0, 2.0, 3.0, 1.0)
    m2 = Medium(1.0, -2.0, 3.0, 1.0)
    assert m1.kappa.imag == 0 and m1.kappa.real > 0
    assert m2.kappa.imag > 0
    assert abs(m2.kappa**2 + m1.kappa**2) <= 1e-15


def test_degenerate_media_rejected():
    with pytest.raises(SingularMedium):
        Medium(1.0, 2.0, 3.0, 0.0)
    with pytest.raises(SingularMedium):
        Medium(1.0, 0.0, 3.0, 1.0)
    with pytest.raises(SingularMedium):
        Medium(1.0, 2.0, float("inf"), 1.0)


def test_medium_serialization_round_trip():
    m = Medium(1.0, 2 + 1j, 3.0, 0.5 - 0.25j)
    again = Medium.from_dict(m.to_dict())
    assert again == m


# -- field system residuals ----------------------------------------------------------


def test_all_zero_fields_satisfy_everything(medium, half_orders):
    rs = maxwell_residuals(zero_em(), zero_src(), medium, half_orders)
    assert all(r.is_zero for r in rs)
    assert continuity_residual(zero_src(), medium, half_orders).is_zero


def test_manufactured_solutions_have_vanishing_residuals(medium, half_orders, rng):
    for _ in range(20):
        em, src = manufacture_maxwell(random_vector(rng), medium, half_orders)
        for eq in maxwell_equations(em, src, medium, half_orders):
            assert eq.relative_coeff() <= 1e-10
        assert continuity_equation(src, medium, half_orders).relative_coeff() <= 1e-10


def test_perturbation_shifts_divergence_residual_by_known_field(medium, half_orders):
    em, src = manufacture_maxwell(
        VectorField(mono(1.0, (0, 2, 0)), mono(0.5, (0, 0, 2)), FracField.zero(CUBE)),
        medium,
        half_orders,
    )
    bump = mono(1.0, (2, 0, 0))
    em2 = EMField(
        VectorField(em.E.u1 + bump, em.E.u2, em.E.u3),
        em.B,
    )
    r1_before = maxwell_residuals(em, src, medium, half_orders)[0]
    r1_after = maxwell_residuals(em2, src, medium, half_orders)[0]
    shift = r1_after - r1_before
    expected = bump.caputo(1, F(3, 4))
    assert rel_residual(shift, expected) < 1e-12
    assert expected.terms[(F(5, 4), F(0), F(0))] == pytest.approx(
        2.0 / math.gamma(2.25), rel=1e-12
    )


def test_continuity_of_pure_charge(medium, half_orders):
    src = SourceSet(FracField.constant(1.0, CUBE), zero_vec())
    res = continuity_residual(src, medium, half_orders)
    expected = -1j * medium.omega * medium.g1 / medium.g3
    assert res.terms[(F(0), F(0), F(0))] == pytest.approx(expected, rel=1e-12)


# -- manufactured solutions ------------------------------------------------------------


def test_manufacture_zero_seed(medium, half_orders):
    em, src = manufacture_maxwell(zero_vec(), medium, half_orders)
    assert em.E.is_zero and em.B.is_zero
    assert src.rho.is_zero and src.j.is_zero


def test_manufacture_single_term_seed(medium, half_orders):
    seed = VectorField(mono(1.0, (0, 2, 0)), FracField.zero(CUBE), FracField.zero(CUBE))
    em, src = manufacture_maxwell(seed, medium, half_orders)
    # only the e3 component of B survives: the axis-2 derivative of E1 over i*omega
    assert em.B.u1.is_zero and em.B.u2.is_zero
    key = (F(0), F(5, 4), F(0))
    expected = -(2.0 / math.gamma(2.25)) / (1j * medium.omega)
    assert em.B.u3.terms[key] == pytest.approx(expected, rel=1e-12)
    assert src.rho.is_zero


def test_manufacture_rejects_degenerate_g1(half_orders):
    m = Medium(0.0, 2.0, 3.0, 1.0)
    with pytest.raises(SingularMedium):
        manufacture_maxwell(zero_vec(), m, half_orders)


def test_manufacture_requires_twice_differentiable_seed(medium, half_orders):
    # exponent 5/4 on axis 2 survives one cross-derivative but not two
    seed = VectorField(mono(1.0, (0, F(5, 4), 0)), FracField.zero(CUBE), FracField.zero(CUBE))
    with pytest.raises(DomainError):
        manufacture_maxwell(seed, medium, half_orders)


# -- phi/psi transform -------------------------------------------------------------------


def test_phi_psi_of_zero(medium):
    pp = to_phi_psi(zero_em(), medium)
    assert pp.phi.is_zero and pp.psi.is_zero


def test_phi_psi_with_vanishing_electric_part(medium, rng):
    b = random_vector(rng)
    pp = to_phi_psi(EMField(zero_vec(), b), medium)
    assert vec_rel_residual(pp.phi, pp.psi) == 0.0
    assert vec_rel_residual(pp.phi, b * medium.kappa) < 1e-14


def test_round_trip_both_directions(medium, rng):
    em = EMField(random_vector(rng), random_vector(rng))
    back = from_phi_psi(to_phi_psi(em, medium), medium)
    assert vec_rel_residual(back.E, em.E) < 1e-12
    assert vec_rel_residual(back.B, em.B) < 1e-12
    pp = PhiPsi(random_vector(rng), random_vector(rng))
    back_pp = to_phi_psi(from_phi_psi(pp, medium), medium)
    assert vec_rel_residual(back_pp.phi, pp.phi) < 1e-12
    assert vec_rel_residual(back_pp.psi, pp.psi) < 1e-12


def test_inversion_degenerate_cases(medium, rng):
    v = random_vector(rng)
    em = from_phi_psi(PhiPsi(v, v), medium)
    assert em.E.is_zero
    em = from_phi_psi(PhiPsi(v, -v), medium)
    assert em.B.is_zero


# -- the equivalence ---------------------------------------------------------------------


def test_quaternionic_residuals_of_zero(medium, half_orders):
    r_phi, r_psi = quaternionic_residuals(
        PhiPsi(zero_vec(), zero_vec()), zero_src(), medium, half_orders
    )
    assert r_phi.is_zero and r_psi.is_zero


def test_forward_direction_on_manufactured_solutions(medium, half_orders, rng):
    for _ in range(20):
        em, src = manufacture_maxwell(random_vector(rng), medium, half_orders)
        pp = to_phi_psi(em, medium)
        for eq in quaternionic_equations(pp, src, medium, half_orders):
            assert eq.relative_coeff() <= 1e-9


def test_reverse_direction_via_inversion(medium, half_orders, rng):
    for _ in range(10):
        em, src = manufacture_maxwell(random_vector(rng), medium, half_orders)
        pp = to_phi_psi(em, medium)
        em_back = from_phi_psi(pp, medium)
        for eq in maxwell_equations(em_back, src, medium, half_orders):
            assert eq.relative_coeff() <= 1e-9


def test_algebraic_identity_on_arbitrary_fields(medium, half_orders, rng):
    # not solutions: the displaced-Dirac residuals must still equal the
    # stated combination of the field-equation residuals
    for _ in range(15):
        em = EMField(random_vector(rng), random_vector(rng))
        src = SourceSet(random_field(rng), random_vector(rng))
        pp = to_phi_psi(em, medium)
        direct = quaternionic_residuals(pp, src, medium, half_orders)
        assembled = quaternionic_from_maxwell_parts(em, src, medium, half_orders)
        assert biq_rel_residual(direct[0], assembled[0]) <= 1e-9
        assert biq_rel_residual(direct[1], assembled[1]) <= 1e-9


def test_second_order_reduction_on_constants(medium, half_orders):
    e_const = VectorField(*(FracField.constant(c, CUBE) for c in (1.0, 0.0, 2.0)))
    em = EMField(e_const, zero_vec())
    from fracquat.physsys import helmholtz_em_residuals

    res_b, res_e = helmholtz_em_residuals(em, medium, half_orders)
    assert res_b.is_zero
    factor = medium.omega**2 / (medium.g2 * medium.g3)
    assert vec_rel_residual(res_e, e_const * factor) < 1e-14


# -- elasticity ---------------------------------------------------------------------------


def test_lame_of_constant_field(half_orders):
    u = VectorField(*(FracField.constant(c, CUBE) for c in (1.0, 2.0, 3.0)))
    assert lame_navier_residual(u, 1.0, 1.0, half_orders).is_zero
    assert lame_sandwich_residual(u, 1.0, 1.0, half_orders).is_zero


def test_lame_parameter_cone(half_orders, rng):
    u = random_vector(rng)
    with pytest.raises(ParameterError):
        lame_navier_residual(u, -3.0, 1.0, half_orders)
    with pytest.raises(ParameterError):
        lame_navier_residual(u, 0.0, -1.0, half_orders)


def test_lame_degenerate_coupling_drops_grad_div(half_orders, rng):
    # lambda = -mu sits outside the physical cone; with the check disabled
    # the gradient-of-divergence term cancels
    from fracquat import laplace_vec

    u = random_vector(rng)
    out = lame_navier_residual(u, -1.0, 1.0, half_orders, check_parameters=False)
    assert vec_rel_residual(out, laplace_vec(u, half_orders)) < 1e-12


def test_lame_two_paths_agree(half_orders, rng):
    for lam, mu in ((1.0, 1.0), (-0.5, 1.0), (0.0, 2.0)):
        for _ in range(10):
            u = random_vector(rng)
            lhs = lame_navier_residual(u, lam, mu, half_orders)
            rhs = -lame_sandwich_residual(u, lam, mu, half_orders)
            assert vec_rel_residual(lhs, rhs) <= 1e-10


def test_sandwich_scalar_part_cancels(half_orders, rng):
    from fracquat import dirac_left, dirac_right

    u = BiqField.from_vector(random_vector(rng))
    total = dirac_right(dirac_left(u, half_orders), half_orders)
    assert total.sc.is_zero


def test_sandwich_readings_agree(half_orders, rng):
    for _ in range(20):
        u = random_vector(rng)
        assert sandwich_reading_residual(u, half_orders) <= 1e-10


def test_grad_div_decomposition(half_orders, rng):
    u_const = VectorField(*(FracField.constant(c, CUBE) for c in (1.0, 2.0, 3.0)))
    assert grad_div_decomposition_check(u_const, half_orders) == 0.0
    single = VectorField(mono(1.0, (2, 0, 0)), FracField.zero(CUBE), FracField.zero(CUBE))
    assert grad_div_decomposition_check(single, half_orders) <= 1e-10
    for _ in range(10):
        assert grad_div_decomposition_check(random_vector(rng), half_orders) <= 1e-10
    bad = VectorField(mono(1.0, (1, 0, 0)), FracField.zero(CUBE), FracField.zero(CUBE))
    with pytest.raises(DomainError):
        grad_div_decomposition_check(bad, half_orders)
