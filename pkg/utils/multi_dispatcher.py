import typing
from typing import Callable, Dict, Generic, List, Tuple, TypeVar

TResult = TypeVar('TResult')


class MultiDispatcher(Generic[TResult]):
    """Dispatches on the runtime types of all positional arguments.

    Handlers are registered by their parameter annotations. A call resolves to
    the handlers whose annotated types are the closest superclasses of the
    argument types (summed MRO distance); results are cached per type tuple.
    """

    _UNRELATED = 2 ** 32 - 1

    def __init__(self):
        self._registry = {}  # type: Dict[Tuple[type, ...], List[Callable[..., TResult]]]
        self._cache = {}  # type: Dict[Tuple[type, ...], Tuple[Callable[..., TResult], ...]]

    def _register(self, fn: Callable[..., TResult]) -> None:
        type_hints = typing.get_type_hints(fn)
        type_hints.pop('return', None)
        types = tuple(type_hints.values())
        self._registry.setdefault(types, []).append(fn)
        self._cache.clear()

    def dispatch(self, *args) -> TResult:
        actions = self.resolve(*map(type, args))
        if len(actions) == 0:
            raise TypeError("No handler registered for {}".format(tuple(type(a).__name__ for a in args)))
        if len(actions) > 1:
            raise TypeError("Ambiguous dispatch for {}".format(tuple(type(a).__name__ for a in args)))
        return actions[0](*args)

    def resolve(self, *types: type) -> Tuple[Callable[..., TResult], ...]:
        actions = self._cache.get(types)
        if actions is not None:
            return actions

        scored = []
        for key in self._registry.keys():
            if len(key) != len(types):
                continue
            distance = sum(self.get_inheritance_distance(t, k) for t, k in zip(types, key))
            if distance < self._UNRELATED:
                scored.append((distance, key))

        if len(scored) == 0:
            actions = ()
        else:
            best = min(distance for distance, _ in scored)
            actions = tuple(fn for distance, key in scored if distance == best for fn in self._registry[key])

        self._cache[types] = actions
        return actions

    @staticmethod
    def get_inheritance_distance(actual_type: type, registered_type: type) -> int:
        try:
            return actual_type.__mro__.index(registered_type)
        except ValueError:
            return MultiDispatcher._UNRELATED

    class MultiDispatcherBuilder:
        def __init__(self):
            self._dispatcher = MultiDispatcher()

        def register(self, fn):
            self._dispatcher._register(fn)
            return self

        def build(self) -> 'MultiDispatcher':
            dispatcher = self._dispatcher
            self._dispatcher = MultiDispatcher()
            return dispatcher
