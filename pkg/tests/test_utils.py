import threading

import pytest

from utils.event import Event
from utils.lazy_class_field import LazyClassField
from utils.multi_dispatcher import MultiDispatcher
from utils.utils import get_asset_path, get_project_root


class Shape:
    pass


class Circle(Shape):
    pass


def describe_shape(shape: Shape, scale: int) -> str:
    return "shape"


def describe_circle(circle: Circle, scale: int) -> str:
    return "circle"


def test_event_notifies_in_order():
    seen = []
    event = Event()
    first, second = (lambda x: seen.append(("first", x))), (lambda x: seen.append(("second", x)))
    event += first
    event += second
    event += first
    assert len(event) == 2
    event(1)
    assert seen == [("first", 1), ("second", 1)]


def test_event_from_many_threads():
    counter = []
    event = Event()
    event += counter.append
    threads = [threading.Thread(target=event, args=(i,)) for i in range(8)]
    for thread in threads:
        thread.start()
    for thread in threads:
        thread.join()
    assert sorted(counter) == list(range(8))


def test_lazy_class_field_computes_once():
    calls = []

    class Holder:
        value = LazyClassField.create(lambda: calls.append(1) or len(calls))

    assert Holder.value == 1
    assert Holder.value == 1
    assert calls == [1]


def test_dispatch_picks_the_closest_handler():
    dispatcher = MultiDispatcher.MultiDispatcherBuilder().register(describe_shape).register(describe_circle).build()
    assert dispatcher.dispatch(Circle(), 1) == "circle"
    assert dispatcher.dispatch(Shape(), 1) == "shape"
    assert dispatcher.resolve(Circle, int) == (describe_circle,)


def test_dispatch_without_handler():
    dispatcher = MultiDispatcher.MultiDispatcherBuilder().register(describe_circle).build()
    with pytest.raises(TypeError):
        dispatcher.dispatch(Shape(), 1)
    assert dispatcher.resolve(str, int) == ()


def test_asset_paths():
    assert get_asset_path("settings.json").startswith(get_project_root())
