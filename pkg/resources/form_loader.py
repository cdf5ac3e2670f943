"""JSON documents for forms, points and ensembles.

Structure is checked against the published schemas; the semantic checks the
schemas cannot express (exponent lengths and degrees) report the same kind of
path, e.g. ``coeffs[2].alpha``.
"""
from typing import Any, Dict, Optional

import numpy as np

from algebra.homogeneous_form import HomogeneousForm
from algebra.multi_index import monomial_exponents, multinomial
from algebra.projective_point import ProjectivePoint
from errors import SchemaError, WaringLabelsError
from resources.config import GlobalConfig
from resources.schemas import validate_document
from resources.settings_loader import load_json_document
from survey.ensemble import Binary, Distribution, EnsembleSpec, Hypersurface, Veronese

MONOMIAL_BASIS = "monomial"
SCALED_BASIS = "scaled"


def _complex(value: Any) -> complex:
    if isinstance(value, list):
        return complex(value[0], value[1])
    return complex(value)


class FormLoader:

    @staticmethod
    def parse_form(data: Dict[str, Any], root: str = "") -> HomogeneousForm:
        validate_document(data, "form", root)
        prefix = root + "." if root else ""
        n, d = data["n"], data["d"]
        scaled = data.get("basis", MONOMIAL_BASIS) == SCALED_BASIS

        try:
            if "vector" in data:
                values = np.array([_complex(v) for v in data["vector"]])
                expected = len(monomial_exponents(n, d))
                if values.size != expected:
                    raise SchemaError(prefix + "vector", "expected {} coefficients, got {}".format(expected, values.size))
                return HomogeneousForm.from_scaled(n, d, values) if scaled else HomogeneousForm.from_vector(n, d, values)

            coeffs = {}
            for i, entry in enumerate(data["coeffs"]):
                path = "{}coeffs[{}].alpha".format(prefix, i)
                alpha = tuple(entry["alpha"])
                if len(alpha) != n + 1:
                    raise SchemaError(path, "expected {} exponents, got {}".format(n + 1, len(alpha)))
                if sum(alpha) != d:
                    raise SchemaError(path, "exponents sum to {}, expected degree {}".format(sum(alpha), d))
                value = complex(entry["re"], entry.get("im", 0.0))
                if scaled:
                    value *= multinomial(alpha)
                coeffs[alpha] = coeffs.get(alpha, 0) + value
            return HomogeneousForm(n, d, coeffs)
        except SchemaError:
            raise
        except (WaringLabelsError, ValueError) as e:
            raise SchemaError(prefix + ("vector" if "vector" in data else "coeffs"), str(e))

    @staticmethod
    def parse_point(data: Any, root: str = "") -> ProjectivePoint:
        validate_document(data, "point", root)
        coords = data["coords"] if isinstance(data, dict) else data
        try:
            return ProjectivePoint([_complex(c) for c in coords])
        except (WaringLabelsError, ValueError) as e:
            raise SchemaError((root + ".coords" if root else "coords") if isinstance(data, dict) else (root or "$"), str(e))

    @staticmethod
    def parse_ensemble(data: Dict[str, Any], config: Optional[GlobalConfig] = None) -> EnsembleSpec:
        validate_document(data, "ensemble")
        config = config or GlobalConfig()
        geometry_data = data["geometry"]
        kind = geometry_data["kind"]
        if kind == "binary":
            geometry = Binary(geometry_data["d"])
        elif kind == "veronese":
            geometry = Veronese(geometry_data["n"], geometry_data["d"])
        else:
            geometry = Hypersurface(FormLoader.parse_form(geometry_data["surface"], "geometry.surface"))

        try:
            return EnsembleSpec(
                geometry=geometry,
                distribution=Distribution(data.get("distribution", Distribution.GAUSSIAN_MONOMIAL.value)),
                trials=data["trials"],
                seed=data.get("seed", config.seed),
                weight=data.get("weight"),
                skip_all_real=data.get("skip_all_real", False),
                real_ranks=data.get("real_ranks", False),
                prefer_pair=data.get("prefer_pair", False),
                max_retries=data.get("max_retries", config.max_retries),
                tolerances=config.tolerances,
                nls=config.nls,
            )
        except ValueError as e:
            raise SchemaError("$", str(e))

    @staticmethod
    def load_form(filepath: str) -> HomogeneousForm:
        return FormLoader.parse_form(load_json_document(filepath))

    @staticmethod
    def load_point(filepath: str) -> ProjectivePoint:
        return FormLoader.parse_point(load_json_document(filepath))

    @staticmethod
    def load_ensemble(filepath: str, config: Optional[GlobalConfig] = None) -> EnsembleSpec:
        return FormLoader.parse_ensemble(load_json_document(filepath), config)
