import csv
import io
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Union

from binary.real_rank import RealRank, Unknown
from labels.label import Label


@dataclass(frozen=True)
class TrialOutcome:
    trial: int
    label: Optional[Label] = None
    real_rank: Optional[Union[RealRank, Unknown]] = None
    failure: Optional[str] = None

    @property
    def failed(self) -> bool:
        return self.label is None


def _real_rank_key(real_rank: Union[RealRank, Unknown]) -> str:
    if isinstance(real_rank, Unknown):
        return "unknown>={}".format(real_rank.lower_bound)
    return str(real_rank.rank)


@dataclass
class LabelHistogram:
    trials: int = 0
    counts: Dict[Label, int] = field(default_factory=dict)
    failures: int = 0
    failure_reasons: Dict[str, int] = field(default_factory=dict)
    real_rank_counts: Dict[str, int] = field(default_factory=dict)
    metadata: Dict[str, Any] = field(default_factory=dict)

    def add(self, outcome: TrialOutcome) -> None:
        self.trials += 1
        if outcome.failed:
            self.failures += 1
            self.failure_reasons[outcome.failure] = self.failure_reasons.get(outcome.failure, 0) + 1
        else:
            self.counts[outcome.label] = self.counts.get(outcome.label, 0) + 1
        if outcome.real_rank is not None:
            key = _real_rank_key(outcome.real_rank)
            self.real_rank_counts[key] = self.real_rank_counts.get(key, 0) + 1

    def merge(self, other: 'LabelHistogram') -> 'LabelHistogram':
        merged = LabelHistogram(self.trials + other.trials, dict(self.counts), self.failures + other.failures,
                                dict(self.failure_reasons), dict(self.real_rank_counts), dict(self.metadata))
        for target, source in ((merged.counts, other.counts),
                               (merged.failure_reasons, other.failure_reasons),
                               (merged.real_rank_counts, other.real_rank_counts)):
            for key, count in source.items():
                target[key] = target.get(key, 0) + count
        return merged

    @property
    def weight_counts(self) -> Dict[int, int]:
        weights = {}
        for label, count in self.counts.items():
            weights[label.weight] = weights.get(label.weight, 0) + count
        return dict(sorted(weights.items()))

    @property
    def max_weight(self) -> Optional[int]:
        return max((label.weight for label in self.counts), default=None)

    @property
    def mean_weight(self) -> Optional[float]:
        total = sum(self.counts.values())
        if total == 0:
            return None
        return sum(label.weight * count for label, count in self.counts.items()) / total

    def frequency(self, label: Label) -> float:
        return self.counts.get(label, 0) / self.trials if self.trials else 0.0

    def to_json(self) -> Dict[str, Any]:
        return {
            "trials": self.trials,
            "counts": [
                {"label": label.to_json(), "weight": label.weight, "count": count}
                for label, count in sorted(self.counts.items())
            ],
            "failures": self.failures,
            "failure_reasons": dict(sorted(self.failure_reasons.items())),
            "weights": {
                "counts": {str(w): c for w, c in self.weight_counts.items()},
                "max": self.max_weight,
                "mean": self.mean_weight,
            },
            "real_ranks": dict(sorted(self.real_rank_counts.items())),
            "metadata": self.metadata,
        }

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["label_a", "label_b", "weight", "count"])
        for label, count in sorted(self.counts.items()):
            writer.writerow([label.a, label.b, label.weight, count])
        writer.writerow(["failures", "", "", self.failures])
        return buffer.getvalue()
