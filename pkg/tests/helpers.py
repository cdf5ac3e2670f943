import json
import os
from typing import Sequence, Tuple

import numpy as np

from algebra.homogeneous_form import HomogeneousForm, power_of_linear_form
from algebra.multi_index import monomial_exponents
from algebra.projective_point import ProjectivePoint, projective_distance


def random_form(rng: np.random.Generator, n: int, d: int) -> HomogeneousForm:
    return HomogeneousForm.from_vector(n, d, rng.standard_normal(len(monomial_exponents(n, d))))


def well_separated(points: Sequence[np.ndarray], separation: float) -> bool:
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            if projective_distance(points[i], points[j]) < separation:
                return False
    return True


def planted_form(
        rng: np.random.Generator,
        n: int,
        d: int,
        a: int,
        b: int,
        separation: float = 0.3
) -> Tuple[HomogeneousForm, np.ndarray, np.ndarray]:
    """Real form with a known decomposition of label (a, b) on well separated points."""
    while True:
        real_points = rng.standard_normal((b, n + 1))
        pair_points = rng.standard_normal((a, n + 1)) + 1j * rng.standard_normal((a, n + 1))
        everything = list(real_points) + list(pair_points) + list(np.conj(pair_points))
        if well_separated(everything, separation) and \
           all(projective_distance(q, np.conj(q)) > separation for q in pair_points):
            break
    vector = np.zeros(len(monomial_exponents(n, d)))
    for p in real_points:
        sign = rng.choice([-1.0, 1.0])
        vector += sign * (1 + rng.random()) * power_of_linear_form(p, d).vector.real
    for q in pair_points:
        mu = rng.standard_normal() + 1j * rng.standard_normal()
        vector += 2 * (mu * power_of_linear_form(q, d).vector).real
    return HomogeneousForm.from_vector(n, d, vector), real_points, pair_points


def matches(found: Sequence[ProjectivePoint], expected: Sequence[np.ndarray], tol: float) -> bool:
    """Same point multisets up to normalization and order."""
    if len(found) != len(expected):
        return False
    unused = list(expected)
    for p in found:
        distances = [projective_distance(p, q) for q in unused]
        best = int(np.argmin(distances))
        if distances[best] > tol:
            return False
        unused.pop(best)
    return True


def cubic_discriminant(coeffs: Sequence[float]) -> float:
    """Discriminant of a x^3 + b x^2 y + c x y^2 + d y^3; positive iff three distinct real roots."""
    a, b, c, d = coeffs
    return 18 * a * b * c * d - 4 * b ** 3 * d + b * b * c * c - 4 * a * c ** 3 - 27 * a * a * d * d


def write_json(directory, name: str, data) -> str:
    path = os.path.join(str(directory), name)
    with open(path, "w") as file:
        json.dump(data, file)
    return path


GOLDEN_DIRECTORY = os.path.join(os.path.dirname(os.path.abspath(__file__)), "golden")


def read_golden(name: str):
    with open(os.path.join(GOLDEN_DIRECTORY, name)) as file:
        return json.load(file)


def assert_matches_golden(actual, golden, path: str = "$") -> None:
    """Same keys, lengths and types everywhere; floats agree to 1e-9, everything else exactly."""
    if isinstance(golden, dict):
        assert isinstance(actual, dict), path
        assert sorted(actual) == sorted(golden), path
        for key in golden:
            assert_matches_golden(actual[key], golden[key], "{}.{}".format(path, key))
    elif isinstance(golden, list):
        assert isinstance(actual, list) and len(actual) == len(golden), path
        for i, (a, g) in enumerate(zip(actual, golden)):
            assert_matches_golden(a, g, "{}[{}]".format(path, i))
    elif isinstance(golden, float):
        assert isinstance(actual, float), path
        assert abs(actual - golden) <= 1e-9 * max(1.0, abs(golden)), path
    else:
        assert type(actual) is type(golden) and actual == golden, path
