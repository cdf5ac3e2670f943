import enum
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple, Union

import numpy as np

from algebra.homogeneous_form import HomogeneousForm
from algebra.multi_index import exponent_matrix, multinomial_weights
from algebra.projective_point import ProjectivePoint
from algebra.tolerances import DEFAULT_TOLERANCES, Tolerances
from decompose.problem import NLSConfig
from hypersurface.hypersurface import DEFAULT_MAX_RETRIES


@dataclass(frozen=True)
class Binary:
    d: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("Binary degree must be positive, got {}".format(self.d))

    @property
    def shape(self) -> Tuple[int, int]:
        return 1, self.d

    def to_json(self) -> Dict[str, Any]:
        return {"kind": "binary", "d": self.d}


@dataclass(frozen=True)
class Veronese:
    n: int
    d: int

    def __post_init__(self):
        if self.n < 1 or self.d < 1:
            raise ValueError("Invalid Veronese shape n={}, d={}".format(self.n, self.d))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.n, self.d

    def to_json(self) -> Dict[str, Any]:
        return {"kind": "veronese", "n": self.n, "d": self.d}


@dataclass(frozen=True)
class Hypersurface:
    F: HomogeneousForm

    @property
    def shape(self) -> Tuple[int, int]:
        return self.F.n, self.F.d

    def to_json(self) -> Dict[str, Any]:
        return {"kind": "hypersurface", "surface": self.F.to_json()}


Geometry = Union[Binary, Veronese, Hypersurface]


class Distribution(enum.Enum):
    GAUSSIAN_MONOMIAL = "gaussian-monomial"
    GAUSSIAN_BOMBIERI = "gaussian-bombieri"


@dataclass(frozen=True)
class EnsembleSpec:
    geometry: Geometry
    distribution: Distribution = Distribution.GAUSSIAN_MONOMIAL
    trials: int = 1
    seed: int = 0
    weight: Optional[int] = None
    skip_all_real: bool = False
    real_ranks: bool = False
    prefer_pair: bool = False
    max_retries: int = DEFAULT_MAX_RETRIES
    tolerances: Tolerances = field(default=DEFAULT_TOLERANCES)
    nls: NLSConfig = field(default=NLSConfig())

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("An ensemble needs at least one trial, got {}".format(self.trials))
        if self.seed < 0:
            raise ValueError("Seed must be non-negative, got {}".format(self.seed))
        if self.weight is not None and self.weight < 1:
            raise ValueError("Weight must be positive, got {}".format(self.weight))
        if self.real_ranks and not isinstance(self.geometry, Binary):
            raise ValueError("Real ranks are tallied for binary ensembles only")

    def to_json(self) -> Dict[str, Any]:
        return {
            "geometry": self.geometry.to_json(),
            "distribution": self.distribution.value,
            "trials": self.trials,
            "seed": self.seed,
            "weight": self.weight,
            "skip_all_real": self.skip_all_real,
            "real_ranks": self.real_ranks,
            "prefer_pair": self.prefer_pair,
            "max_retries": self.max_retries,
            "tolerances": self.tolerances.to_json(),
            "nls": self.nls.to_json(),
        }


def trial_stream(seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(trial,)))


def sample_random_form(spec: EnsembleSpec, stream: np.random.Generator) -> HomogeneousForm:
    """Independent gaussian coefficients; the Bombieri ensemble gives c_alpha variance multinomial(alpha)."""
    if isinstance(spec.geometry, Hypersurface):
        raise ValueError("Hypersurface ensembles sample points, not forms")
    n, d = spec.geometry.shape
    coefficients = stream.standard_normal(exponent_matrix(n, d).shape[0])
    if spec.distribution is Distribution.GAUSSIAN_BOMBIERI:
        coefficients *= np.sqrt(multinomial_weights(n, d))
    return HomogeneousForm.from_vector(n, d, coefficients)


def sample_random_point(spec: EnsembleSpec, stream: np.random.Generator) -> ProjectivePoint:
    n, _ = spec.geometry.shape
    return ProjectivePoint(stream.standard_normal(n + 1))
