import threading
from typing import Callable, Generic, TypeVar

T = TypeVar("T")

_UNSET = object()


class LazyClassField(Generic[T]):
    """Class-level attribute computed on first access and cached afterwards."""

    def __init__(self, fn: Callable[[], T]):
        self._fn = fn
        self._value = _UNSET
        self._lock = threading.Lock()

    def __get__(self, instance, owner) -> T:
        if self._value is _UNSET:
            with self._lock:
                if self._value is _UNSET:
                    self._value = self._fn()
        return self._value

    @staticmethod
    def create(fn: Callable[[], T]) -> 'LazyClassField[T]':
        return LazyClassField(fn)
