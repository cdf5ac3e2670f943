import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from algebra.catalecticant import catalecticant, catalecticant_matrix, numeric_rank
from algebra.homogeneous_form import (
    HomogeneousForm,
    bombieri_norm,
    evaluate,
    form_distance,
    monomial_form,
    partial_derivative,
    power_of_linear_form,
)
from algebra.multi_index import (
    exponent_matrix,
    monomial_exponents,
    monomial_gradients,
    monomial_values,
    multinomial,
    multinomial_weights,
)
from algebra.projective_point import ProjectivePoint, projective_distance
from algebra.tolerances import Tolerances
from errors import DimensionMismatch, InvalidFormError, ZeroPolynomialError
from tests.helpers import random_form

CUBE_SUM = HomogeneousForm(1, 3, {(3, 0): 1, (0, 3): 1})
PAIR_CUBIC = HomogeneousForm(1, 3, {(3, 0): 1, (1, 2): -3})


def test_binary_monomial_order():
    assert monomial_exponents(1, 3) == ((3, 0), (2, 1), (1, 2), (0, 3))


@pytest.mark.parametrize("n, d, count", [(1, 3, 4), (2, 4, 15), (2, 5, 21), (3, 3, 20)])
def test_monomial_count(n, d, count):
    assert len(monomial_exponents(n, d)) == count
    assert exponent_matrix(n, d).shape == (count, n + 1)


@pytest.mark.parametrize("alpha, value", [((2, 1), 3), ((1, 1, 1), 6), ((5, 0), 1), ((2, 2), 6)])
def test_multinomial(alpha, value):
    assert multinomial(alpha) == value


@given(st.integers(1, 3), st.integers(1, 6))
def test_multinomials_sum_to_power(n, d):
    assert multinomial_weights(n, d).sum() == (n + 1) ** d


def test_monomial_gradients_match_finite_differences():
    rng = np.random.default_rng(3)
    exponents = exponent_matrix(2, 4)
    point = rng.standard_normal(3)
    gradients = monomial_gradients(point, exponents)
    step = 1e-6
    for k in range(3):
        shift = np.zeros(3)
        shift[k] = step
        numeric = (monomial_values(point + shift, exponents) - monomial_values(point - shift, exponents)) / (2 * step)
        assert np.allclose(gradients[:, k], numeric, atol=1e-7)


def test_point_is_normalized_at_largest_coordinate():
    p = ProjectivePoint([2.0, -4.0, 1.0])
    assert p.pivot == 1
    assert np.allclose(p.coords, [-0.5, 1.0, -0.25])
    assert p.is_real


def test_point_tie_takes_first_coordinate():
    p = ProjectivePoint([1j, 1])
    assert p.pivot == 0
    assert np.allclose(p.coords, [1, -1j])
    assert not p.is_real


def test_nearly_real_point_is_snapped():
    p = ProjectivePoint([1.0, 0.5 + 1e-12j])
    assert p.is_real
    assert np.all(p.coords.imag == 0)


@pytest.mark.parametrize("coords", [[0, 0], [1], [np.nan, 1]])
def test_invalid_points(coords):
    with pytest.raises(ValueError):
        ProjectivePoint(coords)


@given(st.floats(0.1, 10), st.floats(-np.pi, np.pi))
def test_distance_ignores_representative(scale, angle):
    p = np.array([1 + 2j, -0.5, 3j])
    q = np.array([0.3, 1 - 1j, 2])
    factor = scale * np.exp(1j * angle)
    assert projective_distance(p, q) == pytest.approx(projective_distance(factor * p, q), abs=1e-12)
    assert projective_distance(p, factor * p) < 1e-12


def test_distance_rejects_mixed_spaces():
    with pytest.raises(DimensionMismatch):
        projective_distance([1, 0], [1, 0, 0])


def test_conjugate_point():
    p = ProjectivePoint([1, 2 + 1j])
    assert projective_distance(p.conjugate(), [1, 2 - 1j]) < 1e-12


def test_form_rejects_wrong_degree():
    with pytest.raises(InvalidFormError):
        HomogeneousForm(1, 3, {(2, 0): 1})


def test_form_rejects_wrong_length():
    with pytest.raises(InvalidFormError):
        HomogeneousForm(1, 2, {(1, 1, 0): 1})


def test_zero_form_is_rejected():
    with pytest.raises(ZeroPolynomialError):
        HomogeneousForm(1, 3, {(3, 0): 0})


def test_power_of_raw_linear_form():
    # (i x + y)^3 = -i x^3 - 3 x^2 y + 3i x y^2 + y^3
    power = power_of_linear_form([1j, 1], 3)
    assert np.allclose(power.vector, [-1j, -3, 3j, 1])


def test_conjugate_pair_of_powers_is_real():
    power = power_of_linear_form([1j, 1], 3)
    pair = HomogeneousForm.from_vector(1, 3, 2 * (0.5j * power.vector).real)
    assert form_distance(pair, PAIR_CUBIC) < 1e-15


def test_power_has_scaled_coefficients_equal_to_monomials():
    ell = np.array([0.3, -1.2, 2.0])
    power = power_of_linear_form(ell, 4)
    assert np.allclose(power.scaled_vector(), monomial_values(ell, exponent_matrix(2, 4)))


@given(st.lists(st.floats(-3, 3), min_size=2, max_size=4), st.integers(1, 6))
def test_bombieri_norm_of_power(ell, d):
    ell = np.array(ell)
    if np.linalg.norm(ell) < 1e-3:
        return
    assert bombieri_norm(power_of_linear_form(ell, d)) == pytest.approx(np.linalg.norm(ell) ** d, rel=1e-9)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2 ** 32 - 1))
def test_bombieri_bounds_evaluation(seed):
    rng = np.random.default_rng(seed)
    f = random_form(rng, 2, 4)
    p = rng.standard_normal(3)
    assert abs(evaluate(f, p)) <= bombieri_norm(f) * np.linalg.norm(p) ** 4 * (1 + 1e-12)


def test_evaluate_and_shape_checks():
    assert evaluate(CUBE_SUM, [1, 2]) == pytest.approx(9)
    with pytest.raises(DimensionMismatch):
        evaluate(CUBE_SUM, [1, 2, 3])


def test_monomial_form():
    f = monomial_form((2, 1), 3.0)
    assert f.n == 1 and f.d == 3
    assert f.coeffs == {(2, 1): 3.0}


def test_partial_derivative_of_cube_sum():
    assert partial_derivative(CUBE_SUM, 1).coeffs == {(0, 2): 3}
    assert partial_derivative(PAIR_CUBIC, 0).coeffs == {(2, 0): 3, (0, 2): -3}


def test_partial_derivative_rejects_degenerate_cases():
    with pytest.raises(ZeroPolynomialError):
        partial_derivative(monomial_form((3, 0)), 1)
    with pytest.raises(ValueError):
        partial_derivative(CUBE_SUM, 2)
    with pytest.raises(InvalidFormError):
        partial_derivative(monomial_form((1, 0)), 0)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2 ** 32 - 1), st.integers(2, 6), st.integers(0, 2))
def test_partial_derivative_matches_finite_differences(seed, d, i):
    rng = np.random.default_rng(seed)
    f = random_form(rng, 2, d)
    p = rng.standard_normal(3)
    step = np.zeros(3)
    step[i] = 1e-6
    estimate = (evaluate(f, p + step) - evaluate(f, p - step)) / 2e-6
    assert evaluate(partial_derivative(f, i), p) == pytest.approx(estimate, rel=1e-5, abs=1e-6)


def test_hankel_catalecticant():
    matrix = catalecticant(CUBE_SUM, 2)
    assert matrix.shape == (2, 3)
    assert np.allclose(matrix.entries, [[1, 0, 0], [0, 0, 1]])


def test_catalecticant_of_power_has_rank_one():
    ell = np.array([1.0, -2.0, 0.5])
    power = power_of_linear_form(ell, 5)
    for k in range(1, 5):
        assert catalecticant(power, k).rank() == 1


def test_generic_ternary_quintic_catalecticant_rank():
    f = random_form(np.random.default_rng(7), 2, 5)
    assert catalecticant(f, 2).rank() == 6


def test_catalecticant_degree_bounds():
    with pytest.raises(ValueError):
        catalecticant(CUBE_SUM, 0)
    with pytest.raises(ValueError):
        catalecticant(CUBE_SUM, 3)
    assert catalecticant_matrix(CUBE_SUM, 3).shape == (1, 4)


def test_numeric_rank_of_degenerate_matrices():
    assert numeric_rank(np.zeros((3, 3))) == 0
    assert numeric_rank(np.zeros((0, 2))) == 0


def test_tolerances_validation():
    with pytest.raises(ValueError):
        Tolerances(tau_real=0)
    with pytest.raises(ValueError):
        Tolerances.from_json({"tau_imaginary": 1e-8})
    assert Tolerances.from_json(Tolerances().to_json()) == Tolerances()
