import json
import math
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from fracquat import Cube, FracField, as_exponent, coeff_distance, rel_residual
from fracquat.errors import CubeMismatch, DomainError
from fracquat.sampling import ADMISSIBLE_EXPONENTS, random_axis_field, random_field


def mono(coeff, exps, cube=Cube(0.0, 1.0)):
    return FracField.monomial(coeff, exps, cube)


# -- construction and canonical form ---------------------------------------


def test_duplicate_exponents_merge(unit_cube):
    f = FracField(unit_cube, [((F(2), F(0), F(0)), 1.0), ((F(2), F(0), F(0)), 2.5)])
    assert len(f) == 1
    assert f.terms[(F(2), F(0), F(0))] == pytest.approx(3.5)


def test_zero_coefficients_dropped(unit_cube):
    f = FracField(unit_cube, [((F(1), F(0), F(0)), 0.0)])
    assert f.is_zero


def test_negative_exponent_refused():
    with pytest.raises(DomainError):
        mono(1.0, (F(-1, 2), 0, 0))


def test_float_exponent_refused():
    with pytest.raises(DomainError):
        as_exponent(0.5)


def test_exponent_coercions():
    assert as_exponent("3/2") == F(3, 2)
    assert as_exponent((5, 4)) == F(5, 4)
    assert as_exponent(2) == F(2)


def test_cube_requires_order():
    with pytest.raises(DomainError):
        Cube(1.0, 1.0)


# -- linear structure ---------------------------------------------------------


def test_exact_cancellation_gives_empty_field(unit_cube):
    f = mono(1.3 + 0.7j, (F(5, 2), F(1), F(0)))
    assert (f + (-1.0) * f).is_zero
    assert (f - f).is_zero


def test_tiny_perturbation_pruned(unit_cube):
    f = mono(1.0, (2, 0, 0))
    g = mono(1.0, (3, 0, 0))
    assert (f + 1e-20 * g).terms == f.terms


def test_scaling_by_zero(unit_cube):
    assert (mono(2.0, (2, 0, 0)) * 0).is_zero


def test_cube_mismatch_raises():
    f = mono(1.0, (2, 0, 0), Cube(0.0, 1.0))
    g = mono(1.0, (2, 0, 0), Cube(1.0, 2.0))
    with pytest.raises(CubeMismatch):
        f + g


@given(st.lists(st.tuples(st.sampled_from([0, 1, 2]), st.floats(-5, 5)), max_size=6))
def test_addition_merges_like_terms(entries):
    cube = Cube(0.0, 1.0)
    fields = [mono(c, (p, 0, 0), cube) for p, c in entries if c != 0.0]
    total = FracField.zero(cube)
    for f in fields:
        total = total + f
    expected = {}
    for p, c in entries:
        if c != 0.0:
            expected[F(p)] = expected.get(F(p), 0.0) + c
    for p, c in expected.items():
        got = total.terms.get((p, F(0), F(0)), 0j)
        assert got.real == pytest.approx(c, rel=1e-9, abs=1e-12)


# -- Caputo derivative ---------------------------------------------------------


def test_constant_annihilated(unit_cube):
    f = FracField.constant(7.0, unit_cube)
    assert f.caputo(1, F(3, 4)).is_zero


def test_quadratic_three_quarters(unit_cube):
    # closed form: coefficient Gamma(3)/Gamma(9/4) ~ 1.76522, exponent 5/4
    g = mono(1.0, (2, 0, 0)).caputo(1, F(3, 4))
    assert set(g.terms) == {(F(5, 4), F(0), F(0))}
    assert g.terms[(F(5, 4), F(0), F(0))] == pytest.approx(
        2.0 / math.gamma(2.25), rel=1e-12
    )
    assert g.terms[(F(5, 4), F(0), F(0))].real == pytest.approx(1.76522, abs=5e-6)


def test_separability_across_axes(unit_cube):
    # derivative on axis 2 leaves the axis-1 factor untouched
    f = mono(1.0, (2, 3, 0))
    g = f.caputo(2, F(1, 2))
    key = (F(2), F(5, 2), F(0))
    assert set(g.terms) == {key}
    assert g.terms[key] == pytest.approx(math.gamma(4) / math.gamma(3.5), rel=1e-12)


def test_order_one_is_classical_derivative(unit_cube):
    f = mono(2.0, (3, 0, 0)) + mono(1.0, (F(5, 2), 0, 0))
    g = f.caputo(1, 1)
    assert g.terms[(F(2), F(0), F(0))] == pytest.approx(6.0, rel=1e-12)
    assert g.terms[(F(3, 2), F(0), F(0))] == pytest.approx(2.5, rel=1e-12)


def test_result_leaving_class_raises(unit_cube):
    # exponent strictly between 0 and the order: result would be singular
    f = mono(1.0, (F(1, 2), 0, 0))
    with pytest.raises(DomainError):
        f.caputo(1, F(3, 4))


def test_high_order_cases(unit_cube):
    # p = 0 and p = 1 are annihilated by orders above one
    f = FracField.constant(4.0, unit_cube) + mono(3.0, (1, 0, 0))
    assert f.caputo(1, F(3, 2)).is_zero
    # p in (0, 1) has a non-integrable second derivative at the corner
    with pytest.raises(DomainError):
        mono(1.0, (F(1, 2), 0, 0)).caputo(1, F(3, 2))
    # p in (1, order) would leave the class
    with pytest.raises(DomainError):
        mono(1.0, (F(5, 4), 0, 0)).caputo(1, F(3, 2))
    # p >= order follows the closed form
    g = mono(1.0, (2, 0, 0)).caputo(1, F(3, 2))
    assert g.terms[(F(1, 2), F(0), F(0))] == pytest.approx(
        2.0 / math.gamma(1.5), rel=1e-12
    )


def test_order_bounds(unit_cube):
    f = mono(1.0, (2, 0, 0))
    with pytest.raises(DomainError):
        f.caputo(1, F(0))
    with pytest.raises(DomainError):
        f.caputo(1, F(9, 4))
    with pytest.raises(DomainError):
        f.caputo(4, F(1, 2))


def test_linearity(unit_cube, rng):
    for _ in range(10):
        f = random_axis_field(rng, axis=1)
        g = random_axis_field(rng, axis=1)
        c = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        lhs = (f + c * g).caputo(1, F(1, 2))
        rhs = f.caputo(1, F(1, 2)) + c * g.caputo(1, F(1, 2))
        assert rel_residual(lhs, rhs) < 1e-12


def test_cross_axis_derivatives_commute(rng):
    for _ in range(10):
        f = random_field(rng)
        ab = f.caputo(1, F(3, 4)).caputo(2, F(2, 3))
        ba = f.caputo(2, F(2, 3)).caputo(1, F(3, 4))
        assert rel_residual(ab, ba) < 1e-13


# -- Riemann-Liouville integral ---------------------------------------------------


def test_integral_of_one_is_ramp(unit_cube):
    g = FracField.constant(1.0, unit_cube).rl_integral(1, 1)
    assert g.terms[(F(1), F(0), F(0))] == pytest.approx(1.0, rel=1e-12)


def test_integral_of_sqrt_half_order(unit_cube):
    g = mono(1.0, (F(1, 2), 0, 0)).rl_integral(1, F(1, 2))
    assert g.terms[(F(1), F(0), F(0))] == pytest.approx(
        math.sqrt(math.pi) / 2.0, rel=1e-12
    )


def test_fundamental_theorem_on_random_fields(rng):
    # integral of the derivative restores fields with no constant term
    pool = tuple(p for p in ADMISSIBLE_EXPONENTS if p != 0)
    for _ in range(10):
        f = random_axis_field(rng, axis=1, pool=pool)
        back = f.caputo(1, F(1, 2)).rl_integral(1, F(1, 2))
        assert rel_residual(back, f) < 1e-12


def test_integral_order_positive(unit_cube):
    with pytest.raises(DomainError):
        FracField.constant(1.0, unit_cube).rl_integral(1, F(-1, 2))


# -- composition (semigroup) --------------------------------------------------------


def test_semigroup_concrete_instance(unit_cube):
    # D^{3/4} D^{3/4} t^2 = D^{3/2} t^2 with coefficient 4/sqrt(pi)
    f = mono(1.0, (2, 0, 0))
    composed = f.caputo(1, F(3, 4)).caputo(1, F(3, 4))
    direct = f.caputo(1, F(3, 2))
    assert rel_residual(composed, direct) < 1e-12
    key = (F(1, 2), F(0), F(0))
    assert composed.terms[key].real == pytest.approx(4.0 / math.sqrt(math.pi), rel=1e-12)
    assert composed.terms[key].real == pytest.approx(2.25676, abs=5e-6)


def test_semigroup_random_admissible(rng):
    menu = (F(1, 4), F(1, 2), F(3, 4), F(1))
    for i in range(30):
        axis = i % 3 + 1
        f = random_axis_field(rng, axis=axis)
        for mu1 in menu:
            for mu2 in menu:
                if mu1 + mu2 <= 1:
                    continue
                composed = f.caputo(axis, mu2).caputo(axis, mu1)
                direct = f.caputo(axis, mu1 + mu2)
                assert rel_residual(composed, direct) < 1e-10


def test_semigroup_counterexample_leaves_class(unit_cube):
    # f(x) = x - a has a nonvanishing derivative at the base point; the
    # composition produces a singular function the class cannot hold
    f = mono(1.0, (1, 0, 0))
    inner = f.caputo(1, F(3, 4))
    assert set(inner.terms) == {(F(1, 4), F(0), F(0))}
    with pytest.raises(DomainError):
        inner.caputo(1, F(3, 4))
    # while the summed order annihilates the same input
    assert f.caputo(1, F(3, 2)).is_zero


def test_admissibility_predicate(unit_cube):
    assert FracField.constant(5.0, unit_cube).semigroup_admissible(1)
    assert not mono(1.0, (1, 0, 0)).semigroup_admissible(1)
    assert mono(1.0, (F(5, 2), 0, 0)).semigroup_admissible(1)
    assert mono(1.0, (1, 0, 0)).semigroup_admissible(2)
    assert not mono(1.0, (F(3, 2), 0, 0)).semigroup_admissible(1)


# -- evaluation ------------------------------------------------------------------


def test_eval_at_corner(unit_cube):
    assert mono(1.0, (2, 0, 0)).eval((0.0, 0.3, 0.9)) == 0.0


def test_eval_constant_complex(unit_cube):
    f = FracField.constant(1 + 1j, unit_cube)
    assert f.eval((0.2, 0.4, 0.6)) == 1 + 1j


def test_eval_fractional_power(unit_cube):
    f = mono(1.0, (F(3, 2), 0, 0))
    assert f.eval((0.25, 0.5, 0.5)) == pytest.approx(0.125, rel=1e-14)


def test_eval_outside_cube_raises(unit_cube):
    with pytest.raises(DomainError):
        mono(1.0, (2, 0, 0)).eval((1.5, 0.5, 0.5))


def test_eval_on_shifted_cube(shifted_cube):
    f = FracField.monomial(1.0, (2, 0, 0), shifted_cube)
    assert f.eval((1.5, 1.0, 1.0)) == pytest.approx(0.25, rel=1e-14)
    g = f.caputo(1, F(3, 4))
    # closed forms are anchored at the cube corner, not at zero
    assert g.eval((2.0, 1.0, 1.0)) == pytest.approx(2.0 / math.gamma(2.25), rel=1e-12)


# -- reporting norms -----------------------------------------------------------------


def test_norm_of_zero(unit_cube):
    assert FracField.zero(unit_cube).norm_max() == 0.0


def test_norm_of_monotone_ramp(unit_cube):
    assert mono(1.0, (1, 0, 0)).norm_max(grid=7) == pytest.approx(1.0)


def test_norm_finds_interior_extremum(unit_cube):
    f = mono(1.0, (2, 0, 0)) - mono(1.0, (1, 0, 0))
    assert f.norm_max(grid=101) == pytest.approx(0.25, rel=1e-12)


def test_norm_grid_validation(unit_cube):
    with pytest.raises(DomainError):
        mono(1.0, (2, 0, 0)).norm_max(grid=1)


# -- serialization ----------------------------------------------------------------------


def test_json_round_trip_is_exact(rng):
    f = random_field(rng, max_terms=4) + FracField.constant(0.25 + 1j, Cube(0.0, 1.0))
    data = json.loads(json.dumps(f.to_dict()))
    g = FracField.from_dict(data)
    assert g.cube == f.cube
    assert g.terms == f.terms


def test_spec_format_shape(unit_cube):
    data = mono(1.0, (2, 0, 0)).to_dict()
    assert data == {
        "cube": {"a": 0.0, "b": 1.0},
        "terms": [{"re": 1.0, "im": 0.0, "exp": [[2, 1], [0, 1], [0, 1]]}],
    }


def test_malformed_spec_raises():
    with pytest.raises(DomainError):
        FracField.from_dict({"cube": {"a": 0, "b": 1}})


def test_coeff_distance_helpers(unit_cube):
    f = mono(1.0, (2, 0, 0))
    g = mono(1.0 + 1e-13, (2, 0, 0))
    assert coeff_distance(f, g) == pytest.approx(1e-13, rel=1e-2)
    assert rel_residual(f, f) == 0.0
    assert rel_residual(FracField.zero(unit_cube), FracField.zero(unit_cube)) == 0.0
