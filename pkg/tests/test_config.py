import pytest

from algebra.tolerances import Tolerances
from errors import SchemaError
from resources.config import SEED_ENVIRONMENT_VARIABLE, GlobalConfig, load_config
from resources.resources_manager import ResourcesManager
from resources.resources_registry import ResourcesRegistry
from tests.helpers import write_json


def test_packaged_settings():
    config = load_config(environ={})
    assert config.artifact_version == ResourcesManager.settings["artifact_version"]
    assert config.tolerances == Tolerances()
    assert config.nls.restarts == 8


def test_file_overrides_settings(tmp_path):
    path = write_json(tmp_path, "config.json", {"tolerances": {"tau_sep": 1e-4}, "nls": {"restarts": 3}})
    config = load_config(path, environ={})
    assert config.tolerances.tau_sep == 1e-4
    assert config.tolerances.tau_real == 1e-8
    assert config.nls.restarts == 3


def test_seed_precedence(tmp_path):
    path = write_json(tmp_path, "config.json", {"seed": 5})
    assert load_config(path, environ={}).seed == 5
    assert load_config(path, environ={SEED_ENVIRONMENT_VARIABLE: "6"}).seed == 6
    config = load_config(path, environ={SEED_ENVIRONMENT_VARIABLE: "6"}, seed=7)
    assert config.seed == 7
    assert config.nls.seed == 7


def test_bad_environment_seed():
    with pytest.raises(SchemaError) as error:
        load_config(environ={SEED_ENVIRONMENT_VARIABLE: "many"})
    assert error.value.path == SEED_ENVIRONMENT_VARIABLE


def test_unknown_keys_are_rejected(tmp_path):
    with pytest.raises(SchemaError):
        load_config(write_json(tmp_path, "config.json", {"verbosity": 3}), environ={})
    with pytest.raises(SchemaError):
        GlobalConfig().merged_with({"tolerances": {"tau_imaginary": 1}})


def test_invalid_values_are_schema_errors():
    with pytest.raises(SchemaError):
        GlobalConfig().merged_with({"tolerances": {"tau_sep": -1}})


def test_unreadable_config(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{")
    with pytest.raises(SchemaError):
        load_config(str(path), environ={})


def test_registry_rejects_duplicates():
    builder = ResourcesRegistry.ResourceRegistryBuilder()
    builder.register("seed", 1)
    with pytest.raises(ValueError):
        builder.register("seed", 2)
    registry = builder.build()
    assert "seed" in registry and len(registry) == 1
    with pytest.raises(KeyError):
        registry["nothing"]


def test_config_json_round_trip():
    config = GlobalConfig().with_seed(11)
    assert GlobalConfig().merged_with(config.to_json()) == config
