from typing import Any, Iterable

import jsonschema
from jsonschema.exceptions import best_match

from errors import SchemaError
from resources.resources_manager import ResourcesManager


def format_path(parts: Iterable[Any], root: str = "") -> str:
    """['coeffs', 2, 'alpha'] -> 'coeffs[2].alpha'."""
    path = root
    for part in parts:
        if isinstance(part, int):
            path += "[{}]".format(part)
        else:
            path += ".{}".format(part) if path else str(part)
    return path or "$"


def validate_document(document: Any, schema_name: str, root: str = "") -> None:
    validator = jsonschema.Draft7Validator(ResourcesManager.schemas[schema_name])
    error = best_match(validator.iter_errors(document))
    if error is not None:
        raise SchemaError(format_path(error.absolute_path, root), error.message)
