import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from algebra.catalecticant import catalecticant_matrix
from algebra.homogeneous_form import HomogeneousForm, power_of_linear_form
from decompose.engine import pencil_start
from decompose.initialization import (
    assign_to_template,
    catalecticant_basis,
    pencil_points,
    rank_drop_pairs,
)
from decompose.problem import DecompositionProblem, LabelTemplate
from tests.helpers import matches, planted_form, random_form

CUBE_SUM = HomogeneousForm(1, 3, {(3, 0): 1, (0, 3): 1})
PAIR_CUBIC = HomogeneousForm(1, 3, {(3, 0): 1, (1, 2): -3})


def test_pencil_points_of_cube_sum():
    points = pencil_points(CUBE_SUM, 2, np.random.default_rng(0))
    assert matches(points, [np.array([1, 0]), np.array([0, 1])], 1e-10)


def test_pencil_points_of_a_conjugate_pair():
    points = pencil_points(PAIR_CUBIC, 2, np.random.default_rng(0))
    assert matches(points, [np.array([1, 1j]), np.array([1, -1j])], 1e-10)


def test_pencil_needs_room_for_the_points():
    rng = np.random.default_rng(1)
    assert pencil_points(CUBE_SUM, 3, rng) is None
    assert pencil_points(random_form(rng, 2, 2), 1, rng) is None
    # rank 6 pencil asked for 7 points
    assert pencil_points(random_form(rng, 2, 5), 7, rng) is None


def test_pencil_rejects_a_rank_below_the_request():
    f = power_of_linear_form([1.0, 2.0, -1.0], 5)
    assert pencil_points(f, 2, np.random.default_rng(2)) is None


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 2 ** 32 - 1), st.integers(0, 3), st.integers(0, 6))
def test_pencil_recovers_planted_ternary_quintic_points(seed, a, b):
    if not 0 < 2 * a + b <= 6:
        return
    rng = np.random.default_rng(seed)
    f, real_points, pair_points = planted_form(rng, 2, 5, a, b)
    points = pencil_points(f, 2 * a + b, rng)
    expected = list(real_points) + list(pair_points) + list(np.conj(pair_points))
    assert points is not None
    assert matches(points, expected, 1e-6)


def test_assignment_follows_the_template():
    rng = np.random.default_rng(3)
    f, real_points, pair_points = planted_form(rng, 2, 5, 2, 1)
    real, pairs = assign_to_template(pencil_points(f, 5, rng), LabelTemplate(2, 1))
    assert real.dtype == np.float64
    assert matches(real, real_points, 1e-6)
    assert matches(list(pairs) + list(np.conj(pairs)), list(pair_points) + list(np.conj(pair_points)), 1e-6)


def test_assignment_checks_the_point_count():
    with pytest.raises(ValueError):
        assign_to_template(np.ones((3, 2)), LabelTemplate(1, 0))


def test_pencil_start_is_exact_on_planted_forms():
    rng = np.random.default_rng(4)
    f, _, _ = planted_form(rng, 2, 5, 1, 2)
    parameters = pencil_start(DecompositionProblem(f, LabelTemplate(1, 2)), rng)
    assert parameters is not None
    assert parameters.real_points.shape == (2, 3)
    assert parameters.pair_points.shape == (1, 3)
    vector = sum(c * power_of_linear_form(p, 5).vector.real for c, p in zip(parameters.real_coeffs, parameters.real_points))
    vector = vector + sum(2 * (c * power_of_linear_form(q, 5).vector).real
                          for c, q in zip(parameters.pair_coeffs, parameters.pair_points))
    assert np.linalg.norm(vector - f.vector.real) < 1e-8 * np.linalg.norm(f.vector)


@pytest.mark.parametrize("n, d, k", [(1, 5, 2), (2, 4, 2), (2, 5, 2)])
def test_catalecticant_basis_is_the_linear_map(n, d, k):
    f = random_form(np.random.default_rng(5), n, d)
    contracted = np.tensordot(f.vector.real, catalecticant_basis(n, d, k), axes=1)
    assert np.allclose(contracted, catalecticant_matrix(f, k).entries)


def test_rank_drop_needs_a_kernel():
    f = random_form(np.random.default_rng(6), 2, 5)
    assert rank_drop_pairs(f, 6, 1, np.random.default_rng(0)) is None


def test_rank_drop_returns_unit_pair_points():
    f = random_form(np.random.default_rng(7), 2, 5)
    dropped = rank_drop_pairs(f, 5, 1, np.random.default_rng(0))
    assert dropped is not None
    points, mu = dropped
    assert points.shape == (1, 3) and mu.shape == (1,)
    assert np.allclose(np.linalg.norm(points, axis=1), 1)


@pytest.mark.slow
def test_rank_drop_lowers_the_middle_catalecticant():
    lowered = 0
    for seed in range(10):
        f = random_form(np.random.default_rng(seed), 2, 5)
        points, mu = rank_drop_pairs(f, 5, 1, np.random.default_rng(seed))
        pair = 2 * (mu[0] * power_of_linear_form(points[0], 5).vector).real
        reduced = HomogeneousForm.from_vector(2, 5, f.vector.real - pair)
        before = np.linalg.svd(catalecticant_matrix(f, 2).entries, compute_uv=False)[-1]
        after = np.linalg.svd(catalecticant_matrix(reduced, 2).entries, compute_uv=False)[-1]
        if after < before:
            lowered += 1
    assert lowered >= 8
