from typing import Any, Dict, Mapping, Sequence, Tuple, Union

import numpy as np

from algebra.multi_index import (
    Exponent,
    bombieri_weights,
    exponent_matrix,
    monomial_exponents,
    monomial_index,
    monomial_values,
    multinomial_weights,
)
from algebra.projective_point import ProjectivePoint
from errors import DimensionMismatch, InvalidFormError, ZeroPolynomialError

LinearForm = Union[ProjectivePoint, Sequence[complex], np.ndarray]


class HomogeneousForm:
    """Degree-d form in n+1 variables, coefficients indexed by exponent vectors.

    Coefficients are stored densely in monomial order (see ``algebra.multi_index``).
    The *scaled* coefficients a_alpha are defined by c_alpha = multinomial(alpha) * a_alpha,
    so that a pure power l^d has scaled coefficients l^alpha.
    """

    __slots__ = ("_n", "_d", "_vector")

    def __init__(self, n: int, d: int, coeffs: Mapping[Exponent, complex]):
        HomogeneousForm._check_shape(n, d)
        index = monomial_index(n, d)
        vector = np.zeros(len(index), dtype=np.complex128)
        for alpha, value in coeffs.items():
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != n + 1 or any(a < 0 for a in alpha):
                raise InvalidFormError("Exponent vector {} is not valid for n={}".format(alpha, n))
            if sum(alpha) != d:
                raise InvalidFormError("Exponent vector {} does not sum to degree {}".format(alpha, d))
            vector[index[alpha]] += complex(value)
        self._init_vector(n, d, vector)

    def _init_vector(self, n: int, d: int, vector: np.ndarray):
        if not np.all(np.isfinite(vector)):
            raise InvalidFormError("Form coefficients must be finite")
        if not np.any(vector != 0):
            raise ZeroPolynomialError("A homogeneous form needs at least one nonzero coefficient")
        vector.flags.writeable = False
        self._n = n
        self._d = d
        self._vector = vector

    @staticmethod
    def _check_shape(n: int, d: int):
        if n < 1:
            raise InvalidFormError("Forms need at least two variables (n >= 1), got n={}".format(n))
        if d < 1:
            raise InvalidFormError("Degree must be at least 1, got {}".format(d))

    @staticmethod
    def from_vector(n: int, d: int, vector: Sequence[complex]) -> 'HomogeneousForm':
        HomogeneousForm._check_shape(n, d)
        vector = np.array(vector, dtype=np.complex128).ravel()
        expected = len(monomial_exponents(n, d))
        if vector.size != expected:
            raise DimensionMismatch("Expected {} coefficients for (n={}, d={}), got {}".format(expected, n, d, vector.size))
        form = HomogeneousForm.__new__(HomogeneousForm)
        form._init_vector(n, d, vector)
        return form

    @staticmethod
    def from_scaled(n: int, d: int, scaled: Sequence[complex]) -> 'HomogeneousForm':
        scaled = np.asarray(scaled, dtype=np.complex128)
        return HomogeneousForm.from_vector(n, d, scaled * multinomial_weights(n, d))

    @property
    def n(self) -> int:
        return self._n

    @property
    def d(self) -> int:
        return self._d

    @property
    def vector(self) -> np.ndarray:
        return self._vector

    @property
    def coeffs(self) -> Dict[Exponent, complex]:
        return {
            alpha: complex(value)
            for alpha, value in zip(monomial_exponents(self._n, self._d), self._vector)
            if value != 0
        }

    @property
    def real_flag(self) -> bool:
        return bool(np.all(self._vector.imag == 0))

    @property
    def exponents(self) -> np.ndarray:
        return exponent_matrix(self._n, self._d)

    def scaled_vector(self) -> np.ndarray:
        return self._vector / multinomial_weights(self._n, self._d)

    def bombieri_vector(self) -> np.ndarray:
        """Coordinates in which the euclidean norm is the Bombieri norm."""
        return self._vector / bombieri_weights(self._n, self._d)

    def real_vector(self) -> np.ndarray:
        if not self.real_flag:
            raise InvalidFormError("Form has non-real coefficients")
        return self._vector.real.copy()

    def scale(self, factor: complex) -> 'HomogeneousForm':
        return HomogeneousForm.from_vector(self._n, self._d, self._vector * factor)

    def to_json(self) -> Dict[str, Any]:
        return {
            "n": self._n,
            "d": self._d,
            "coeffs": [
                {"alpha": list(alpha), "re": value.real, "im": value.imag}
                for alpha, value in self.coeffs.items()
            ],
        }

    def __repr__(self):
        names = ["x{}".format(i) for i in range(self._n + 1)] if self._n > 1 else ["x", "y"]
        terms = []
        for alpha, value in self.coeffs.items():
            monomial = "*".join(
                name if a == 1 else "{}^{}".format(name, a) for name, a in zip(names, alpha) if a > 0
            )
            coefficient = "{:.6g}".format(value.real) if value.imag == 0 else "({:.6g})".format(value)
            terms.append("{}*{}".format(coefficient, monomial))
        return "HomogeneousForm({})".format(" + ".join(terms))


def linear_coords(ell: LinearForm) -> np.ndarray:
    if isinstance(ell, ProjectivePoint):
        return ell.coords
    coords = np.array(ell, dtype=np.complex128).ravel()
    if not np.all(np.isfinite(coords)):
        raise ValueError("Linear form coefficients must be finite")
    return coords


def power_of_linear_form(ell: LinearForm, d: int) -> HomogeneousForm:
    """(l_0 x_0 + ... + l_n x_n)^d. Raw coefficient vectors are expanded as given."""
    coords = linear_coords(ell)
    n = coords.size - 1
    HomogeneousForm._check_shape(n, d)
    values = monomial_values(coords, exponent_matrix(n, d)) * multinomial_weights(n, d)
    if not np.any(coords.imag != 0):
        values = values.real.astype(np.complex128)
    return HomogeneousForm.from_vector(n, d, values)


def evaluate(f: HomogeneousForm, p: Union[ProjectivePoint, Sequence[complex], np.ndarray]) -> complex:
    coords = p.coords if isinstance(p, ProjectivePoint) else np.asarray(p, dtype=np.complex128)
    if coords.size != f.n + 1:
        raise DimensionMismatch("Form in {} variables evaluated at a point with {} coordinates".format(f.n + 1, coords.size))
    return complex(np.dot(f.vector, monomial_values(coords, f.exponents)))


def bombieri_norm(f: HomogeneousForm) -> float:
    return float(np.linalg.norm(f.bombieri_vector()))


def form_distance(f: HomogeneousForm, g: HomogeneousForm) -> float:
    """Relative Bombieri distance ||f - g|| / ||g||."""
    if (f.n, f.d) != (g.n, g.d):
        raise DimensionMismatch("Forms of different shapes: ({}, {}) vs ({}, {})".format(f.n, f.d, g.n, g.d))
    return float(np.linalg.norm(f.bombieri_vector() - g.bombieri_vector()) / np.linalg.norm(g.bombieri_vector()))


def monomial_form(alpha: Tuple[int, ...], coefficient: complex = 1.0) -> HomogeneousForm:
    return HomogeneousForm(len(alpha) - 1, sum(alpha), {tuple(alpha): coefficient})


def partial_derivative(f: HomogeneousForm, i: int) -> HomogeneousForm:
    """d f / d x_i, a form of degree d - 1; the zero derivative raises ZeroPolynomialError."""
    if not 0 <= i <= f.n:
        raise ValueError("Variable index {} outside [0, {}]".format(i, f.n))
    if f.d < 2:
        raise InvalidFormError("Derivatives of linear forms are constants")
    lowered = {}
    for alpha, value in f.coeffs.items():
        if alpha[i] > 0:
            beta = alpha[:i] + (alpha[i] - 1,) + alpha[i + 1:]
            lowered[beta] = alpha[i] * value
    return HomogeneousForm(f.n, f.d - 1, lowered)
