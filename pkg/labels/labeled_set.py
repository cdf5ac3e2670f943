from typing import Any, Dict, List, Sequence, Tuple

import numpy as np

from algebra.projective_point import PointLike, ProjectivePoint, as_point, projective_distance
from algebra.tolerances import DEFAULT_TOLERANCES
from errors import DimensionMismatch, DuplicatePoint, NotSigmaInvariant
from labels.label import Label


def canonical_pair_representative(p: ProjectivePoint) -> ProjectivePoint:
    """Of p and its conjugate, the one whose first non-real coordinate has positive imaginary part."""
    for c in p.coords:
        if c.imag != 0:
            return p if c.imag > 0 else p.conjugate()
    return p


class LabeledSet:
    """Sigma-invariant finite set given by its real points and one representative per conjugate pair."""

    def __init__(
            self,
            real_points: Sequence[ProjectivePoint],
            pairs: Sequence[ProjectivePoint],
            distinct_tol: float = DEFAULT_TOLERANCES.distinct_tol
    ):
        real_points = tuple(as_point(p) for p in real_points)
        pairs = tuple(canonical_pair_representative(as_point(q)) for q in pairs)
        if len(real_points) + len(pairs) == 0:
            raise ValueError("A labeled set cannot be empty")
        dims = {p.dim for p in real_points + pairs}
        if len(dims) != 1:
            raise DimensionMismatch("Points of a labeled set must share one ambient space, got dimensions {}".format(sorted(dims)))
        for p in real_points:
            if not p.is_real:
                raise ValueError("Real point {} has non-real coordinates".format(p))
        for q in pairs:
            if q.is_real:
                raise ValueError("Pair representative {} is real".format(q))

        self._real_points = real_points
        self._pairs = pairs
        self._label = Label(len(pairs), len(real_points))

        points = self.points
        for i in range(len(points)):
            for j in range(i + 1, len(points)):
                if projective_distance(points[i], points[j]) <= distinct_tol:
                    raise DuplicatePoint("Points {} and {} coincide".format(points[i], points[j]))

    @property
    def real_points(self) -> Tuple[ProjectivePoint, ...]:
        return self._real_points

    @property
    def pairs(self) -> Tuple[ProjectivePoint, ...]:
        return self._pairs

    @property
    def label(self) -> Label:
        return self._label

    @property
    def dim(self) -> int:
        return (self._real_points + self._pairs)[0].dim

    @property
    def points(self) -> Tuple[ProjectivePoint, ...]:
        """Flattened set: real points, pair representatives, then their conjugates."""
        return self._real_points + self._pairs + tuple(q.conjugate() for q in self._pairs)

    def __len__(self):
        return self._label.weight

    def to_json(self) -> Dict[str, Any]:
        return {
            "real_points": [p.to_json() for p in self._real_points],
            "pairs": [q.to_json() for q in self._pairs],
            "label": self._label.to_json(),
        }

    def __repr__(self):
        return "LabeledSet(label={}, real={}, pairs={})".format(self._label, list(self._real_points), list(self._pairs))


def label_of(
        points: Sequence[PointLike],
        tau_real: float = DEFAULT_TOLERANCES.tau_real,
        tau_pair: float = DEFAULT_TOLERANCES.tau_pair,
        distinct_tol: float = DEFAULT_TOLERANCES.distinct_tol
) -> LabeledSet:
    points = [as_point(p) for p in points]
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            if projective_distance(points[i], points[j]) <= distinct_tol:
                raise DuplicatePoint("Points {} and {} coincide".format(points[i], points[j]))

    real_points = []  # type: List[ProjectivePoint]
    non_real = []  # type: List[ProjectivePoint]
    for p in points:
        if p.is_real_within(tau_real):
            real_points.append(p.as_real())
        else:
            non_real.append(p)

    pairs = []
    matched = [False] * len(non_real)
    for i, p in enumerate(non_real):
        if matched[i]:
            continue
        matched[i] = True
        target = p.conjugate()
        candidates = [j for j in range(len(non_real)) if not matched[j]]
        if len(candidates) == 0:
            raise NotSigmaInvariant("The conjugate of {} is missing from the set".format(p))
        distances = [projective_distance(non_real[j], target) for j in candidates]
        best = int(np.argmin(distances))
        if distances[best] > tau_pair:
            raise NotSigmaInvariant(
                "The conjugate of {} is missing from the set (nearest candidate at {:.3e})".format(p, distances[best])
            )
        matched[candidates[best]] = True
        pairs.append(p)

    return LabeledSet(real_points, pairs, distinct_tol=distinct_tol)
