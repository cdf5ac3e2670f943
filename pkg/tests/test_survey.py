import numpy as np
import pytest

from algebra.homogeneous_form import HomogeneousForm
from algebra.multi_index import multinomial_weights
from labels.label import Label
from survey.ensemble import (
    Binary,
    Distribution,
    EnsembleSpec,
    Hypersurface,
    Veronese,
    sample_random_form,
    trial_stream,
)
from survey.histogram import LabelHistogram, TrialOutcome
from survey.survey import run_trial, survey_labels
from utils.event import Event

SPHERE = HomogeneousForm(2, 2, {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1})


def test_ensemble_validation():
    with pytest.raises(ValueError):
        EnsembleSpec(Binary(3), trials=0)
    with pytest.raises(ValueError):
        EnsembleSpec(Veronese(2, 4), real_ranks=True)
    with pytest.raises(ValueError):
        Binary(0)


def test_trial_streams_are_independent_of_order():
    first = trial_stream(7, 3).standard_normal(4)
    trial_stream(7, 2).standard_normal(4)
    assert np.allclose(first, trial_stream(7, 3).standard_normal(4))
    assert not np.allclose(first, trial_stream(7, 4).standard_normal(4))


def test_bombieri_ensemble_variances():
    spec = EnsembleSpec(Veronese(2, 3), Distribution.GAUSSIAN_BOMBIERI)
    rng = np.random.default_rng(0)
    samples = np.array([sample_random_form(spec, rng).vector.real for _ in range(4000)])
    assert np.allclose(samples.var(axis=0) / multinomial_weights(2, 3), 1, atol=0.15)


def test_hypersurface_ensemble_samples_points_only():
    with pytest.raises(ValueError):
        sample_random_form(EnsembleSpec(Hypersurface(SPHERE)), np.random.default_rng(0))


def test_binary_cubic_survey_sees_both_classes():
    histogram = survey_labels(EnsembleSpec(Binary(3), trials=200, seed=1))
    assert histogram.trials == 200
    assert set(histogram.counts) == {Label(1, 0), Label(0, 2)}
    assert histogram.failures == 0
    assert histogram.max_weight == 2
    assert histogram.metadata["generic_rank"] == 2


def test_same_seed_same_histogram():
    spec = EnsembleSpec(Binary(5), trials=30, seed=3)
    assert survey_labels(spec).to_json() == survey_labels(spec).to_json()


def test_thread_count_does_not_change_the_histogram():
    spec = EnsembleSpec(Binary(4), trials=40, seed=9)
    assert survey_labels(spec, threads=1).to_json() == survey_labels(spec, threads=3).to_json()
    with pytest.raises(ValueError):
        survey_labels(spec, threads=0)


def test_empty_conic_always_takes_a_pair():
    histogram = survey_labels(EnsembleSpec(Hypersurface(SPHERE), trials=25))
    assert histogram.frequency(Label(1, 0)) == 1.0


def test_real_rank_tally():
    histogram = survey_labels(EnsembleSpec(Binary(3), trials=30, seed=2, real_ranks=True))
    assert set(histogram.real_rank_counts) <= {"2", "3"}
    assert sum(histogram.real_rank_counts.values()) == 30
    assert histogram.metadata["real_rank_summary"]["twice_generic_rank"] == 4


def test_listener_sees_every_trial():
    seen = []
    event = Event()
    event += seen.append
    survey_labels(EnsembleSpec(Binary(3), trials=12), threads=2, on_trial_done=event)
    assert sorted(outcome.trial for outcome in seen) == list(range(12))


def test_run_trial_dispatches_on_geometry():
    outcome = run_trial(EnsembleSpec(Hypersurface(SPHERE)), 0)
    assert outcome.label == Label(1, 0)


def test_histogram_merge_and_csv():
    first, second = LabelHistogram(), LabelHistogram()
    first.add(TrialOutcome(0, Label(1, 0)))
    first.add(TrialOutcome(1, failure="DecompositionFailure"))
    second.add(TrialOutcome(2, Label(1, 0)))
    second.add(TrialOutcome(3, Label(0, 3)))
    merged = first.merge(second)
    assert merged.trials == 4
    assert merged.counts == {Label(1, 0): 2, Label(0, 3): 1}
    assert merged.failure_reasons == {"DecompositionFailure": 1}
    assert merged.weight_counts == {2: 2, 3: 1}
    assert merged.mean_weight == pytest.approx(7 / 3)
    assert merged.to_csv().splitlines() == [
        "label_a,label_b,weight,count",
        "0,3,3,1",
        "1,0,2,2",
        "failures,,,1",
    ]


def test_empty_histogram_statistics():
    histogram = LabelHistogram()
    assert histogram.max_weight is None
    assert histogram.mean_weight is None
    assert histogram.frequency(Label(1, 0)) == 0.0


@pytest.mark.slow
def test_ternary_quartic_survey_stays_within_weight():
    spec = EnsembleSpec(Veronese(2, 4), trials=5, seed=4, weight=6)
    histogram = survey_labels(spec, threads=2)
    assert histogram.trials == 5
    assert all(label.weight == 6 for label in histogram.counts)
