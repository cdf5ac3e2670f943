"""Labels of weight at most two for real points against a real hypersurface.

A real line through q meets the hypersurface in d points closed under
conjugation; two real ones, or one conjugate pair, already span that line.
"""
import logging
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P

from algebra.homogeneous_form import HomogeneousForm, bombieri_norm, evaluate
from algebra.projective_point import ProjectivePoint
from algebra.roots import binary_roots, min_separation
from algebra.tolerances import DEFAULT_TOLERANCES, Tolerances
from errors import DimensionMismatch, InvalidFormError, RetriesExhausted, WaringLabelsError
from labels.labeled_set import LabeledSet, label_of
from labels.span import Decomposition, span_membership_point

logger = logging.getLogger(__name__)

DEFAULT_MAX_RETRIES = 20


@dataclass(frozen=True)
class HypersurfaceInstance:
    F: HomogeneousForm
    q: ProjectivePoint

    def __post_init__(self):
        if not self.F.real_flag:
            raise InvalidFormError("The hypersurface must be defined over the reals")
        if not self.q.is_real:
            raise InvalidFormError("Point {} is not real".format(self.q))
        if self.q.dim != self.F.n:
            raise DimensionMismatch(
                "Hypersurface in P^{} but point in P^{}".format(self.F.n, self.q.dim)
            )

    def to_json(self):
        return {"surface": self.F.to_json(), "point": self.q.to_json()}


def restrict_to_line(F: HomogeneousForm, q: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Coefficients b_j of t^{d-j} s^j in F(t q + s v)."""
    q = np.asarray(q.coords if isinstance(q, ProjectivePoint) else q)
    v = np.asarray(v.coords if isinstance(v, ProjectivePoint) else v)
    if q.size != F.n + 1 or v.size != F.n + 1:
        raise DimensionMismatch("Line endpoints must have {} coordinates".format(F.n + 1))
    if F.real_flag and not np.any(q.imag) and not np.any(v.imag):
        q, v, coefficients = q.real, v.real, F.vector.real
    else:
        coefficients = F.vector

    restricted = np.zeros(F.d + 1, dtype=np.result_type(coefficients, q, v))
    for c, alpha in zip(coefficients, F.exponents):
        if c == 0:
            continue
        term = np.array([1.0])
        for qi, vi, a in zip(q, v, alpha):
            if a > 0:
                term = P.polymul(term, P.polypow([qi, vi], a))
        restricted[:term.size] += c * term
    return restricted


def _on_hypersurface(F: HomogeneousForm, q: ProjectivePoint, tol: float) -> bool:
    scale = bombieri_norm(F) * np.linalg.norm(q.coords) ** F.d
    return abs(evaluate(F, q)) <= tol * scale


def _random_direction(q: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    v = rng.standard_normal(q.size)
    v -= q * np.dot(q, v)
    return v / np.linalg.norm(v)


def find_label_hypersurface(
        instance: HypersurfaceInstance,
        rng: np.random.Generator,
        max_retries: int = DEFAULT_MAX_RETRIES,
        prefer_pair: bool = False,
        tolerances: Tolerances = DEFAULT_TOLERANCES
) -> Decomposition:
    F, q = instance.F, instance.q
    if F.d < 2:
        raise InvalidFormError("A hyperplane meets a line in a single point; degree must be at least 2")

    if _on_hypersurface(F, q, tolerances.residual_tol):
        labeled_set = LabeledSet([q], [], tolerances.distinct_tol)
        return Decomposition(labeled_set, span_membership_point(q, labeled_set, tolerances.residual_tol))

    base = q.unit().real
    for attempt in range(max_retries):
        v = _random_direction(base, rng)
        restricted = restrict_to_line(F, base, v)
        roots = binary_roots(restricted)
        separation = min_separation(roots)
        if separation <= tolerances.tau_sep:
            logger.debug("Attempt %d: line is not transversal (separation %.3e)", attempt, separation)
            continue

        points = [ProjectivePoint(r.coords[0] * base + r.coords[1] * v) for r in roots]
        try:
            intersection = label_of(points, tolerances.tau_real, tolerances.tau_pair, tolerances.distinct_tol)
        except WaringLabelsError as e:
            logger.debug("Attempt %d: %s", attempt, e)
            continue

        real_points, pairs = intersection.real_points, intersection.pairs
        if pairs and (prefer_pair or len(real_points) < 2):
            labeled_set = LabeledSet([], pairs[:1], tolerances.distinct_tol)
        elif len(real_points) >= 2:
            labeled_set = LabeledSet(real_points[:2], [], tolerances.distinct_tol)
        else:
            continue

        try:
            certificate = span_membership_point(q, labeled_set, tolerances.residual_tol, tolerances.rank_tol)
        except WaringLabelsError as e:
            logger.debug("Attempt %d: %s", attempt, e)
            continue
        logger.debug("Attempt %d: label %s", attempt, labeled_set.label)
        return Decomposition(labeled_set, certificate)

    raise RetriesExhausted(max_retries)
