from typing import Dict, Generic, Iterator, Optional, TypeVar

K = TypeVar("K")
V = TypeVar("V")


class ResourcesRegistry(Generic[K, V]):
    """Named resources loaded from the assets directory."""

    def __init__(self):
        self._resources = {}  # type: Dict[K, V]

    def __getitem__(self, item: K) -> V:
        try:
            return self._resources[item]
        except KeyError:
            raise KeyError("Unknown resource {!r}; available: {}".format(item, sorted(map(str, self._resources))))

    def __setitem__(self, key: K, value: V):
        self._resources[key] = value

    def __contains__(self, item: K) -> bool:
        return item in self._resources

    def __iter__(self) -> Iterator[K]:
        return iter(self._resources)

    def __len__(self) -> int:
        return len(self._resources)

    def get(self, item: K, default: Optional[V] = None) -> Optional[V]:
        return self._resources.get(item, default)

    def keys(self):
        return self._resources.keys()

    def to_dict(self) -> Dict[K, V]:
        return dict(self._resources)

    class ResourceRegistryBuilder(Generic[K, V]):
        def __init__(self):
            self._registry = ResourcesRegistry[K, V]()

        def register(self, name: K, resource: V):
            if name in self._registry:
                raise ValueError("Resource {!r} registered twice".format(name))
            self._registry._resources[name] = resource
            return self

        def build(self) -> 'ResourcesRegistry[K, V]':
            registry = self._registry
            self._registry = ResourcesRegistry[K, V]()
            return registry
