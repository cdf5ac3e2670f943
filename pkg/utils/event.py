import threading
from typing import Callable, Generic, List, TypeVar

TArgs = TypeVar("TArgs")


class Event(Generic[TArgs]):
    """Listener list; ``event += fn`` subscribes, ``event(...)`` notifies in subscription order."""

    def __init__(self):
        self._listeners = []  # type: List[Callable]
        self._lock = threading.Lock()

    def __call__(self, *args: TArgs, **kwargs) -> None:
        with self._lock:
            listeners = list(self._listeners)
        for listener in listeners:
            listener(*args, **kwargs)

    def __iadd__(self, listener: Callable) -> 'Event[TArgs]':
        with self._lock:
            if listener not in self._listeners:
                self._listeners.append(listener)
        return self

    def __len__(self) -> int:
        return len(self._listeners)

    def __repr__(self):
        return "Event({})".format(len(self._listeners))
