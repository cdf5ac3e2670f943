from dataclasses import asdict, dataclass, fields
from typing import Any, Dict


@dataclass(frozen=True)
class Tolerances:
    tau_real: float = 1e-8
    tau_pair: float = 1e-6
    tau_sep: float = 1e-6
    rank_tol: float = 1e-10
    residual_tol: float = 1e-8
    distinct_tol: float = 1e-8

    def __post_init__(self):
        for field in fields(self):
            value = getattr(self, field.name)
            if not value > 0:
                raise ValueError("Tolerance {} must be positive, got {}".format(field.name, value))

    def to_json(self) -> Dict[str, float]:
        return asdict(self)

    @staticmethod
    def from_json(data: Dict[str, Any]) -> 'Tolerances':
        known = {field.name for field in fields(Tolerances)}
        unknown = set(data) - known
        if unknown:
            raise ValueError("Unknown tolerance keys: {}".format(sorted(unknown)))
        return Tolerances(**{key: float(value) for key, value in data.items()})


DEFAULT_TOLERANCES = Tolerances()
