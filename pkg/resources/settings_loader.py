import json
import os
from typing import Any

from errors import SchemaError
from resources.resources_registry import ResourcesRegistry


def load_json_document(filepath: str) -> Any:
    try:
        with open(filepath, 'r') as file:
            return json.load(file)
    except (OSError, json.JSONDecodeError) as e:
        raise SchemaError("$", "Invalid json file {}: {}".format(filepath, e))


class SettingsLoader:

    @staticmethod
    def load_settings_from_json(filepath: str) -> ResourcesRegistry.ResourceRegistryBuilder[str, Any]:
        data = load_json_document(filepath)
        if not isinstance(data, dict):
            raise SchemaError("$", "Settings must be a JSON object")
        settings = ResourcesRegistry.ResourceRegistryBuilder()
        for setting_name, setting_data in data.items():
            settings.register(setting_name, setting_data)
        return settings

    @staticmethod
    def load_schemas_from_directory(directory: str) -> ResourcesRegistry.ResourceRegistryBuilder[str, Any]:
        """One schema per ``<name>.json`` file, registered under ``<name>``."""
        schemas = ResourcesRegistry.ResourceRegistryBuilder()
        for filename in sorted(os.listdir(directory)):
            name, extension = os.path.splitext(filename)
            if extension == ".json":
                schemas.register(name, load_json_document(os.path.join(directory, filename)))
        return schemas
