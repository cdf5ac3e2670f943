"""Run configuration: packaged defaults, then a --config file, then the environment, then flags."""
import logging
import os
from dataclasses import dataclass, field, replace
from typing import Any, Dict, Mapping, Optional

from algebra.tolerances import Tolerances
from decompose.problem import NLSConfig
from errors import SchemaError
from resources.resources_manager import ResourcesManager
from resources.resources_registry import ResourcesRegistry
from resources.settings_loader import load_json_document

logger = logging.getLogger(__name__)

SEED_ENVIRONMENT_VARIABLE = "WARING_LABELS_SEED"

_KNOWN_KEYS = {"artifact_version", "seed", "max_retries", "real_rank_budget", "tolerances", "nls"}


@dataclass(frozen=True)
class GlobalConfig:
    tolerances: Tolerances = field(default_factory=Tolerances)
    seed: int = 0
    max_retries: int = 20
    real_rank_budget: int = 256
    nls: NLSConfig = field(default_factory=NLSConfig)
    artifact_version: str = "0"

    def __post_init__(self):
        if self.seed < 0:
            raise ValueError("Seed must be non-negative, got {}".format(self.seed))
        if self.max_retries < 1:
            raise ValueError("max_retries must be positive, got {}".format(self.max_retries))
        if self.real_rank_budget < 1:
            raise ValueError("real_rank_budget must be positive, got {}".format(self.real_rank_budget))

    def merged_with(self, data: Mapping[str, Any], path: str = "$") -> 'GlobalConfig':
        unknown = set(data) - _KNOWN_KEYS
        if unknown:
            raise SchemaError(path, "Unknown configuration keys: {}".format(sorted(unknown)))
        changes = {}
        try:
            if "tolerances" in data:
                merged = self.tolerances.to_json()
                merged.update(data["tolerances"])
                changes["tolerances"] = Tolerances.from_json(merged)
            if "nls" in data:
                merged = self.nls.to_json()
                merged.update(data["nls"])
                changes["nls"] = NLSConfig.from_json(merged)
            for key in ("seed", "max_retries", "real_rank_budget"):
                if key in data:
                    changes[key] = int(data[key])
            if "artifact_version" in data:
                changes["artifact_version"] = str(data["artifact_version"])
            if "seed" in changes and "seed" not in data.get("nls", {}):
                changes["nls"] = changes.get("nls", self.nls).with_changes(seed=changes["seed"])
            return replace(self, **changes)
        except (TypeError, ValueError) as e:
            raise SchemaError(path, str(e))

    def with_seed(self, seed: int) -> 'GlobalConfig':
        return replace(self, seed=seed, nls=self.nls.with_changes(seed=seed))

    def to_json(self) -> Dict[str, Any]:
        return {
            "tolerances": self.tolerances.to_json(),
            "seed": self.seed,
            "max_retries": self.max_retries,
            "real_rank_budget": self.real_rank_budget,
            "nls": self.nls.to_json(),
            "artifact_version": self.artifact_version,
        }

    @staticmethod
    def from_registry(settings: ResourcesRegistry[str, Any]) -> 'GlobalConfig':
        return GlobalConfig().merged_with(settings.to_dict(), path="settings")


def load_config(
        config_path: Optional[str] = None,
        environ: Optional[Mapping[str, str]] = None,
        seed: Optional[int] = None
) -> GlobalConfig:
    config = GlobalConfig.from_registry(ResourcesManager.settings)
    if config_path is not None:
        data = load_json_document(config_path)
        if not isinstance(data, dict):
            raise SchemaError("$", "Configuration must be a JSON object")
        config = config.merged_with(data)

    environ = os.environ if environ is None else environ
    if SEED_ENVIRONMENT_VARIABLE in environ:
        try:
            config = config.with_seed(int(environ[SEED_ENVIRONMENT_VARIABLE]))
        except ValueError:
            raise SchemaError(SEED_ENVIRONMENT_VARIABLE, "not an integer: {!r}".format(environ[SEED_ENVIRONMENT_VARIABLE]))
        logger.debug("Seed taken from %s", SEED_ENVIRONMENT_VARIABLE)

    if seed is not None:
        config = config.with_seed(seed)
    return config
