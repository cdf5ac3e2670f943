from abc import ABC
from typing import Any, Dict

from resources.resources_registry import ResourcesRegistry
from resources.settings_loader import SettingsLoader
from utils.lazy_class_field import LazyClassField
from utils.utils import get_asset_path, get_schema_directory


class ResourcesManager(ABC):

    settings \
        = LazyClassField[ResourcesRegistry[str, Any]].create(
            lambda: SettingsLoader.load_settings_from_json(
                get_asset_path("settings.json")
            ).build()
        )

    schemas \
        = LazyClassField[ResourcesRegistry[str, Dict[str, Any]]].create(
            lambda: SettingsLoader.load_schemas_from_directory(
                get_schema_directory()
            ).build()
        )
