from dataclasses import asdict, dataclass, fields, replace
from typing import Any, Dict, NamedTuple

import numpy as np

from algebra.homogeneous_form import HomogeneousForm
from errors import DimensionMismatch, InvalidFormError
from labels.label import Label


class Parameters(NamedTuple):
    real_points: np.ndarray  # (b, n+1) float
    pair_points: np.ndarray  # (a, n+1) complex
    real_coeffs: np.ndarray  # (b,) float
    pair_coeffs: np.ndarray  # (a,) complex


@dataclass(frozen=True)
class LabelTemplate:
    """Shape of a labeled decomposition searched for: a conjugate pairs, b real points.

    Flat parameter layout: real points (b rows), pair points real parts (a rows),
    pair points imaginary parts (a rows), real coefficients, pair coefficients
    real parts, pair coefficients imaginary parts.
    """
    a: int
    b: int

    def __post_init__(self):
        # Label validates the entries
        Label(self.a, self.b)

    @staticmethod
    def from_label(label: Label) -> 'LabelTemplate':
        return LabelTemplate(label.a, label.b)

    @property
    def label(self) -> Label:
        return Label(self.a, self.b)

    @property
    def weight(self) -> int:
        return 2 * self.a + self.b

    def parameter_count(self, n: int) -> int:
        return (self.b + 2 * self.a) * (n + 1) + self.b + 2 * self.a

    def pack(self, parameters: Parameters) -> np.ndarray:
        real_points, pair_points, real_coeffs, pair_coeffs = parameters
        pair_points = np.asarray(pair_points, dtype=np.complex128)
        pair_coeffs = np.asarray(pair_coeffs, dtype=np.complex128)
        return np.concatenate([
            np.asarray(real_points, dtype=np.float64).ravel(),
            pair_points.real.ravel(),
            pair_points.imag.ravel(),
            np.asarray(real_coeffs, dtype=np.float64).ravel(),
            pair_coeffs.real.ravel(),
            pair_coeffs.imag.ravel(),
        ])

    def unpack(self, params: np.ndarray, n: int) -> Parameters:
        params = np.asarray(params, dtype=np.float64)
        if params.shape != (self.parameter_count(n),):
            raise DimensionMismatch("Template {} in P^{} needs {} parameters, got shape {}".format(
                self.label, n, self.parameter_count(n), params.shape))
        width = n + 1
        a, b = self.a, self.b
        offset = 0

        def take(count):
            nonlocal offset
            chunk = params[offset:offset + count]
            offset += count
            return chunk

        real_points = take(b * width).reshape(b, width)
        pair_re = take(a * width).reshape(a, width)
        pair_im = take(a * width).reshape(a, width)
        real_coeffs = take(b)
        mu_re = take(a)
        mu_im = take(a)
        return Parameters(real_points, pair_re + 1j * pair_im, real_coeffs, mu_re + 1j * mu_im)

    def __str__(self):
        return str(self.label)


@dataclass(frozen=True)
class NLSConfig:
    max_iters: int = 500
    lambda_init: float = 1e-3
    gradient_tol: float = 1e-12
    residual_tol: float = 1e-6
    restarts: int = 8
    seed: int = 0
    workers: int = 1

    def __post_init__(self):
        for field in fields(self):
            value = getattr(self, field.name)
            if field.name == "seed":
                if value < 0:
                    raise ValueError("Seed must be non-negative, got {}".format(value))
            elif not value > 0:
                raise ValueError("NLS setting {} must be positive, got {}".format(field.name, value))

    def with_changes(self, **changes) -> 'NLSConfig':
        return replace(self, **changes)

    def to_json(self) -> Dict[str, Any]:
        return asdict(self)

    @staticmethod
    def from_json(data: Dict[str, Any]) -> 'NLSConfig':
        types = {field.name: field.type for field in fields(NLSConfig)}
        unknown = set(data) - set(types)
        if unknown:
            raise ValueError("Unknown NLS keys: {}".format(sorted(unknown)))
        return NLSConfig(**{
            key: int(value) if types[key] in (int, "int") else float(value)
            for key, value in data.items()
        })


@dataclass(frozen=True)
class DecompositionProblem:
    f: HomogeneousForm
    template: LabelTemplate
    config: NLSConfig = NLSConfig()

    def __post_init__(self):
        if not self.f.real_flag:
            raise InvalidFormError("Labeled decompositions are defined for real forms")

    @property
    def n(self) -> int:
        return self.f.n

    @property
    def d(self) -> int:
        return self.f.d

    @property
    def target(self) -> np.ndarray:
        """f in Bombieri coordinates."""
        return self.f.bombieri_vector().real
