from typing import Sequence, Union

import numpy as np

from algebra.tolerances import DEFAULT_TOLERANCES
from errors import DimensionMismatch

# relative slack under which two moduli count as tied for the pivot
_PIVOT_TIE = 1e-12

PointLike = Union['ProjectivePoint', Sequence[complex], np.ndarray]


class ProjectivePoint:
    """Point of complex projective space stored by its normalized representative.

    The first coordinate of (numerically) largest modulus is scaled to exactly 1.
    """

    __slots__ = ("_coords", "_pivot", "_is_real")

    def __init__(self, coords: Sequence[complex], tau_real: float = DEFAULT_TOLERANCES.tau_real):
        raw = np.array(coords, dtype=np.complex128).ravel()
        if raw.size < 2:
            raise DimensionMismatch("A projective point needs at least two coordinates, got {}".format(raw.size))
        if not np.all(np.isfinite(raw)):
            raise ValueError("Projective point coordinates must be finite: {}".format(raw))
        moduli = np.abs(raw)
        top = moduli.max()
        if top == 0:
            raise ValueError("The zero vector is not a projective point")

        pivot = int(np.argmax(moduli >= top * (1 - _PIVOT_TIE)))
        normalized = raw / raw[pivot]
        normalized[pivot] = 1.0

        is_real = bool(np.max(np.abs(normalized.imag)) <= tau_real)
        if is_real:
            normalized = normalized.real.astype(np.complex128)

        normalized.flags.writeable = False
        self._coords = normalized
        self._pivot = pivot
        self._is_real = is_real

    @property
    def coords(self) -> np.ndarray:
        return self._coords

    @property
    def dim(self) -> int:
        return self._coords.size - 1

    @property
    def pivot(self) -> int:
        return self._pivot

    @property
    def is_real(self) -> bool:
        return self._is_real

    def is_real_within(self, tau_real: float) -> bool:
        return bool(np.max(np.abs(self._coords.imag)) <= tau_real)

    def real_coords(self) -> np.ndarray:
        return self._coords.real.copy()

    def unit(self) -> np.ndarray:
        return self._coords / np.linalg.norm(self._coords)

    def conjugate(self) -> 'ProjectivePoint':
        return ProjectivePoint(np.conj(self._coords))

    def as_real(self) -> 'ProjectivePoint':
        return ProjectivePoint(self._coords.real)

    def distance(self, other: PointLike) -> float:
        return projective_distance(self, other)

    def to_json(self):
        return [[float(c.real), float(c.imag)] for c in self._coords]

    def __repr__(self):
        def fmt(c):
            if c.imag == 0:
                return "{:.6g}".format(c.real)
            return "{:.6g}{:+.6g}i".format(c.real, c.imag)
        return "[{}]".format(", ".join(fmt(c) for c in self._coords))


def as_point(point: PointLike) -> ProjectivePoint:
    if isinstance(point, ProjectivePoint):
        return point
    return ProjectivePoint(point)


def conjugate_point(p: ProjectivePoint) -> ProjectivePoint:
    return p.conjugate()


def projective_distance(p: PointLike, q: PointLike) -> float:
    """Sine of the angle between the lines of p and q; zero iff they are the same point."""
    u = np.asarray(p.coords if isinstance(p, ProjectivePoint) else p, dtype=np.complex128)
    v = np.asarray(q.coords if isinstance(q, ProjectivePoint) else q, dtype=np.complex128)
    if u.shape != v.shape:
        raise DimensionMismatch("Points live in different spaces: {} vs {}".format(u.size - 1, v.size - 1))
    u = u / np.linalg.norm(u)
    v = v / np.linalg.norm(v)
    return float(np.linalg.norm(v - u * np.vdot(u, v)))
