import json
import logging
import sys
from typing import Any, Dict, Optional, TextIO

from resources.config import GlobalConfig
from resources.schemas import validate_document

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"

_handler = None  # type: Optional[logging.Handler]


def configure_logging(verbose: bool, stream: Optional[TextIO] = None) -> None:
    """Diagnostics go to standard error; standard output carries only the JSON document."""
    global _handler
    root = logging.getLogger()
    if _handler is not None:
        root.removeHandler(_handler)
    _handler = logging.StreamHandler(stream or sys.stderr)
    _handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(_handler)
    root.setLevel(logging.DEBUG if verbose else logging.WARNING)


def envelope(command: str, config: GlobalConfig, result: Dict[str, Any]) -> Dict[str, Any]:
    document = {
        "command": command,
        "artifact_version": config.artifact_version,
        "seed": config.seed,
        "config": config.to_json(),
    }
    document.update(result)
    return document


def dumps(document: Dict[str, Any]) -> str:
    # floats keep their shortest round-tripping repr
    return json.dumps(document, sort_keys=True, allow_nan=False)


def emit(document: Dict[str, Any], schema_name: str, stream: Optional[TextIO] = None) -> None:
    validate_document(document, schema_name)
    (stream or sys.stdout).write(dumps(document) + "\n")
