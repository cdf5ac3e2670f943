"""Real-span membership certificates for sigma-invariant sets.

A conjugate pair {q, conj(q)} contributes mu * v_q + conj(mu) * v_conj(q) = 2 Re(mu v_q),
so every certificate reconstructs to a real vector by construction.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, NamedTuple, Sequence, Tuple

import numpy as np

from algebra.catalecticant import numeric_rank
from algebra.homogeneous_form import HomogeneousForm
from algebra.multi_index import bombieri_weights, exponent_matrix, monomial_values, multinomial_weights
from algebra.projective_point import ProjectivePoint
from algebra.tolerances import DEFAULT_TOLERANCES
from errors import DimensionMismatch, InvalidFormError, NotInSpan
from labels.labeled_set import LabeledSet


@dataclass(frozen=True)
class SpanCertificate:
    real_coeffs: Tuple[float, ...]
    pair_coeffs: Tuple[complex, ...]
    residual: float
    degenerate: bool = field(default=False)

    def to_json(self) -> Dict[str, Any]:
        return {
            "real_coeffs": [float(c) for c in self.real_coeffs],
            "pair_coeffs": [[float(c.real), float(c.imag)] for c in self.pair_coeffs],
            "residual": float(self.residual),
            "degenerate": self.degenerate,
        }


class Decomposition(NamedTuple):
    labeled_set: LabeledSet
    certificate: SpanCertificate

    @property
    def label(self):
        return self.labeled_set.label

    def to_json(self) -> Dict[str, Any]:
        data = self.labeled_set.to_json()
        data.update(self.certificate.to_json())
        return data


@dataclass(frozen=True)
class SpanFit:
    real_coeffs: np.ndarray
    pair_coeffs: np.ndarray
    residual: float
    degenerate: bool

    def certificate(self) -> SpanCertificate:
        return SpanCertificate(
            tuple(float(c) for c in self.real_coeffs),
            tuple(complex(c) for c in self.pair_coeffs),
            self.residual,
            self.degenerate,
        )


def solve_real_span(
        target: np.ndarray,
        real_vectors: Sequence[np.ndarray],
        pair_vectors: Sequence[np.ndarray],
        rank_tol: float = DEFAULT_TOLERANCES.rank_tol
) -> SpanFit:
    """Least squares for target ~ sum l_i r_i + sum 2 Re(mu_j q_j) with real l_i, complex mu_j."""
    target = np.asarray(target, dtype=np.float64)
    columns = [np.asarray(v).real for v in real_vectors]
    for v in pair_vectors:
        v = np.asarray(v, dtype=np.complex128)
        columns.append(2 * v.real)
        columns.append(-2 * v.imag)
    system = np.column_stack(columns) if columns else np.zeros((target.size, 0))

    solution, _, _, _ = np.linalg.lstsq(system, target, rcond=None)
    norm = np.linalg.norm(target)
    residual = float(np.linalg.norm(system @ solution - target) / norm) if norm > 0 else 0.0
    degenerate = numeric_rank(system, rank_tol) < system.shape[1]

    count = len(real_vectors)
    real_coeffs = solution[:count]
    pair_coeffs = solution[count::2] + 1j * solution[count + 1::2]
    return SpanFit(real_coeffs, pair_coeffs, residual, degenerate)


def _power_vector(point: np.ndarray, d: int) -> np.ndarray:
    n = point.size - 1
    return monomial_values(np.asarray(point, dtype=np.complex128), exponent_matrix(n, d)) * bombieri_weights(n, d)


def fit_coefficients(
        target: HomogeneousForm,
        real_points: Sequence[np.ndarray],
        pair_points: Sequence[np.ndarray],
        rank_tol: float = DEFAULT_TOLERANCES.rank_tol
) -> SpanFit:
    """Best real-span coefficients of ``target`` on the d-th powers, in the Bombieri norm."""
    if not target.real_flag:
        raise InvalidFormError("Span membership is decided for real targets only")
    d = target.d
    real_vectors = [_power_vector(np.asarray(p).real, d) for p in real_points]
    pair_vectors = [_power_vector(np.asarray(q), d) for q in pair_points]
    return solve_real_span(target.bombieri_vector().real, real_vectors, pair_vectors, rank_tol)


def span_membership(
        target: HomogeneousForm,
        labeled_set: LabeledSet,
        d: int,
        tol: float = DEFAULT_TOLERANCES.residual_tol,
        rank_tol: float = DEFAULT_TOLERANCES.rank_tol
) -> SpanCertificate:
    if target.d != d:
        raise DimensionMismatch("Target has degree {}, expected {}".format(target.d, d))
    if target.n != labeled_set.dim:
        raise DimensionMismatch("Target in {} variables, points in P^{}".format(target.n + 1, labeled_set.dim))
    fit = fit_coefficients(
        target,
        [p.coords for p in labeled_set.real_points],
        [q.coords for q in labeled_set.pairs],
        rank_tol,
    )
    if fit.residual > tol:
        raise NotInSpan(fit.residual, tol)
    return fit.certificate()


def span_membership_point(
        q: ProjectivePoint,
        labeled_set: LabeledSet,
        tol: float = DEFAULT_TOLERANCES.residual_tol,
        rank_tol: float = DEFAULT_TOLERANCES.rank_tol
) -> SpanCertificate:
    if not q.is_real:
        raise ValueError("Point {} is not real".format(q))
    if q.dim != labeled_set.dim:
        raise DimensionMismatch("Point in P^{}, set in P^{}".format(q.dim, labeled_set.dim))
    fit = solve_real_span(
        q.real_coords(),
        [p.coords for p in labeled_set.real_points],
        [r.coords for r in labeled_set.pairs],
        rank_tol,
    )
    if fit.residual > tol:
        raise NotInSpan(fit.residual, tol)
    return fit.certificate()


def reconstruct(labeled_set: LabeledSet, certificate: SpanCertificate, d: int) -> HomogeneousForm:
    """sum l_i l_{p_i}^d + sum 2 Re(mu_j l_{q_j}^d), exactly real."""
    if len(certificate.real_coeffs) != len(labeled_set.real_points) or \
       len(certificate.pair_coeffs) != len(labeled_set.pairs):
        raise DimensionMismatch("Certificate does not match the labeled set {}".format(labeled_set.label))
    n = labeled_set.dim
    exponents = exponent_matrix(n, d)
    weights = multinomial_weights(n, d)
    vector = np.zeros(exponents.shape[0], dtype=np.float64)
    for coefficient, p in zip(certificate.real_coeffs, labeled_set.real_points):
        vector += coefficient * monomial_values(p.real_coords(), exponents)
    for coefficient, q in zip(certificate.pair_coeffs, labeled_set.pairs):
        vector += 2 * (coefficient * monomial_values(q.coords, exponents)).real
    return HomogeneousForm.from_vector(n, d, vector * weights)
