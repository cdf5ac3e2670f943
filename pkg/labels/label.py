from dataclasses import dataclass
from typing import List, Tuple


@dataclass(frozen=True, order=True)
class Label:
    """(a, b): a conjugate pairs and b real points."""
    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError("Label entries must be non-negative, got ({}, {})".format(self.a, self.b))
        if self.a == 0 and self.b == 0:
            raise ValueError("(0, 0) is not a label")

    @property
    def weight(self) -> int:
        return 2 * self.a + self.b

    def to_json(self) -> List[int]:
        return [self.a, self.b]

    @staticmethod
    def from_json(data) -> 'Label':
        a, b = data
        return Label(int(a), int(b))

    def __str__(self):
        return "({}, {})".format(self.a, self.b)


def weight(label: Label) -> int:
    return label.weight


def templates_of_weight(w: int, skip_all_real: bool = False) -> Tuple[Label, ...]:
    """Labels of weight w by decreasing number of real points."""
    if w < 1:
        raise ValueError("Weight must be positive, got {}".format(w))
    labels = [Label((w - b) // 2, b) for b in range(w, -1, -2)]
    if skip_all_real:
        labels = [label for label in labels if label.a > 0]
    return tuple(labels)
