import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from algebra.projective_point import ProjectivePoint
from algebra.roots import (
    binary_roots,
    min_separation,
    pair_conjugate_roots,
    root_backward_error,
    univariate_roots,
)
from errors import PairingFailure, ZeroPolynomialError
from labels.label import Label
from tests.helpers import matches


def test_univariate_roots():
    roots = np.sort_complex(univariate_roots([1, 0, -1]))
    assert np.allclose(roots, [-1, 1])


def test_constant_has_no_roots():
    assert univariate_roots([0, 0, 3]).size == 0
    with pytest.raises(ZeroPolynomialError):
        univariate_roots([0, 0])


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2 ** 32 - 1), st.integers(2, 10))
def test_roots_have_small_backward_error(seed, degree):
    coeffs = np.random.default_rng(seed).standard_normal(degree + 1)
    for root in univariate_roots(coeffs):
        assert root_backward_error(coeffs, root) < 1e-10


def test_binary_roots_include_infinity():
    # XY vanishes at (1:0) and (0:1)
    assert matches(binary_roots([0, 1, 0]), [np.array([1, 0]), np.array([0, 1])], 1e-12)


def test_binary_roots_of_sum_of_squares():
    assert matches(binary_roots([1, 0, 1]), [np.array([1j, 1]), np.array([-1j, 1])], 1e-12)


def test_binary_roots_of_large_roots_are_refined():
    # (X - 1e6 Y)(X - Y)
    roots = binary_roots([1, -(1e6 + 1), 1e6])
    assert matches(roots, [np.array([1e6, 1]), np.array([1, 1])], 1e-12)


def test_min_separation():
    points = [ProjectivePoint([1, 0]), ProjectivePoint([0, 1]), ProjectivePoint([1, 1])]
    assert min_separation(points) == pytest.approx(np.sqrt(0.5))
    assert min_separation(points[:1]) == float("inf")


def test_pair_conjugate_roots():
    partition = pair_conjugate_roots([-1j, 2.0, 1j])
    assert partition.label == Label(1, 1)
    assert partition.real_roots == (2.0,)
    assert partition.pairs[0][0] == pytest.approx(1j)


def test_unpaired_root_fails():
    with pytest.raises(PairingFailure) as error:
        pair_conjugate_roots([1j, 2j])
    assert error.value.distance > 1


def test_lonely_complex_root_fails():
    with pytest.raises(PairingFailure):
        pair_conjugate_roots([1.0, 1j])
