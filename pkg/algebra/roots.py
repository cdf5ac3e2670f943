from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np
from scipy.linalg import matrix_balance

from algebra.projective_point import ProjectivePoint
from algebra.tolerances import DEFAULT_TOLERANCES
from errors import PairingFailure, ZeroPolynomialError
from labels.label import Label

# leading coefficients below this fraction of the largest one are treated as zero
_INFINITY_TRIM = 1e-14


def _polish(coeffs: np.ndarray, root: complex) -> complex:
    """One Newton step, kept only if it does not increase |p|."""
    value = np.polyval(coeffs, root)
    slope = np.polyval(np.polyder(coeffs), root)
    if slope == 0:
        return root
    candidate = root - value / slope
    if abs(np.polyval(coeffs, candidate)) <= abs(value):
        return candidate
    return root


def univariate_roots(coeffs: Sequence[complex]) -> np.ndarray:
    """Roots of c_0 t^m + c_1 t^{m-1} + ... + c_m with multiplicity.

    Eigenvalues of the balanced companion matrix, each refined by one Newton step.
    """
    coeffs = np.trim_zeros(np.asarray(coeffs, dtype=np.complex128).ravel(), 'f')
    if coeffs.size == 0:
        raise ZeroPolynomialError("The zero polynomial has no finite root set")
    if not np.any(coeffs.imag != 0):
        coeffs = coeffs.real
    m = coeffs.size - 1
    if m == 0:
        return np.empty(0, dtype=np.complex128)

    companion = np.zeros((m, m), dtype=coeffs.dtype)
    companion[0, :] = -coeffs[1:] / coeffs[0]
    companion[1:, :-1] += np.eye(m - 1, dtype=coeffs.dtype)
    balanced, _ = matrix_balance(companion, permute=True, scale=True)
    eigenvalues = np.linalg.eigvals(balanced).astype(np.complex128)

    return np.array([_polish(coeffs, z) for z in eigenvalues], dtype=np.complex128)


def root_backward_error(coeffs: Sequence[complex], root: complex) -> float:
    """|p(z)| relative to the evaluation of |p| on |z|."""
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    scale = np.polyval(np.abs(coeffs), abs(root))
    if scale == 0:
        return 0.0
    return float(abs(np.polyval(coeffs, root)) / scale)


def binary_roots(coeffs: Sequence[complex]) -> List[ProjectivePoint]:
    """The k projective roots (alpha : beta) of sum_j g_j X^{k-j} Y^j.

    Vanishing leading coefficients contribute roots at (1 : 0). Roots of modulus
    above one are refined in the chart X = 1.
    """
    g = np.asarray(coeffs, dtype=np.complex128).ravel()
    scale = np.max(np.abs(g))
    if scale == 0:
        raise ZeroPolynomialError("The zero binary form has no finite root set")

    at_infinity = 0
    while at_infinity < g.size - 1 and abs(g[at_infinity]) <= _INFINITY_TRIM * scale:
        at_infinity += 1

    reversed_coeffs = g[::-1]
    points = [ProjectivePoint([1.0, 0.0]) for _ in range(at_infinity)]
    for t in univariate_roots(g[at_infinity:]):
        if abs(t) > 1:
            s = _polish(np.trim_zeros(reversed_coeffs, 'f'), 1 / t)
            points.append(ProjectivePoint([1.0, s]))
        else:
            points.append(ProjectivePoint([t, 1.0]))
    return points


def min_separation(points: Sequence[ProjectivePoint]) -> float:
    """Smallest pairwise projective distance; infinite for fewer than two points."""
    best = float("inf")
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            best = min(best, points[i].distance(points[j]))
    return best


@dataclass(frozen=True)
class RootPartition:
    real_roots: Tuple[float, ...]
    pairs: Tuple[Tuple[complex, complex], ...]

    @property
    def label(self) -> Label:
        return Label(len(self.pairs), len(self.real_roots))


def pair_conjugate_roots(
        roots: Sequence[complex],
        tau_real: float = DEFAULT_TOLERANCES.tau_real,
        tau_pair: float = DEFAULT_TOLERANCES.tau_pair
) -> RootPartition:
    roots = [complex(z) for z in roots]
    real_roots = []
    non_real = []
    for z in roots:
        if abs(z.imag) <= tau_real * (1 + abs(z)):
            real_roots.append(z.real)
        else:
            non_real.append(z)

    pairs = []
    matched = [False] * len(non_real)
    for i, z in enumerate(non_real):
        if matched[i]:
            continue
        matched[i] = True
        candidates = [j for j in range(len(non_real)) if not matched[j]]
        if len(candidates) == 0:
            raise PairingFailure(z, float("inf"))
        target = z.conjugate()
        j = min(candidates, key=lambda c: abs(non_real[c] - target))
        distance = abs(non_real[j] - target)
        if distance > tau_pair * (1 + abs(z)):
            raise PairingFailure(z, distance)
        matched[j] = True
        upper = z if z.imag > 0 else non_real[j]
        pairs.append((upper, upper.conjugate()))

    return RootPartition(tuple(real_roots), tuple(pairs))
