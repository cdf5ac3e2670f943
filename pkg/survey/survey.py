"""Monte Carlo tallies of the labels the engines reach on random real data.

Trials are split into contiguous chunks, one per thread, and the partial
histograms are merged in trial order so the result does not depend on the
thread count.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

import numpy as np

from binary.real_rank import real_rank_binary
from binary.sylvester import curve_weight_bound, generic_complex_rank_binary, sylvester_decompose
from decompose.engine import decompose_weight
from decompose.generic_rank import generic_rank, generic_rank_flags
from errors import WaringLabelsError
from hypersurface.hypersurface import HypersurfaceInstance, find_label_hypersurface
from survey.ensemble import (
    Binary,
    EnsembleSpec,
    Hypersurface,
    Veronese,
    sample_random_form,
    sample_random_point,
    trial_stream,
)
from survey.histogram import LabelHistogram, TrialOutcome
from utils.event import Event
from utils.multi_dispatcher import MultiDispatcher

logger = logging.getLogger(__name__)


def _failure(trial: int, error: WaringLabelsError) -> TrialOutcome:
    return TrialOutcome(trial, failure=type(error).__name__)


def binary_trial(geometry: Binary, spec: EnsembleSpec, trial: int, rng: np.random.Generator) -> TrialOutcome:
    f = sample_random_form(spec, rng)
    real_rank = real_rank_binary(f, tolerances=spec.tolerances) if spec.real_ranks else None
    try:
        decomposition = sylvester_decompose(f, spec.tolerances)
    except WaringLabelsError as e:
        return TrialOutcome(trial, real_rank=real_rank, failure=type(e).__name__)
    return TrialOutcome(trial, decomposition.label, real_rank)


def veronese_trial(geometry: Veronese, spec: EnsembleSpec, trial: int, rng: np.random.Generator) -> TrialOutcome:
    f = sample_random_form(spec, rng)
    weight = spec.weight if spec.weight is not None else generic_rank(geometry.n, geometry.d) + 1
    nls = spec.nls.with_changes(seed=int(rng.integers(2 ** 32)))
    try:
        decomposition = decompose_weight(f, weight, spec.skip_all_real, nls, spec.tolerances)
    except WaringLabelsError as e:
        return _failure(trial, e)
    return TrialOutcome(trial, decomposition.label)


def hypersurface_trial(geometry: Hypersurface, spec: EnsembleSpec, trial: int, rng: np.random.Generator) -> TrialOutcome:
    q = sample_random_point(spec, rng)
    try:
        instance = HypersurfaceInstance(geometry.F, q)
        decomposition = find_label_hypersurface(instance, rng, spec.max_retries, spec.prefer_pair, spec.tolerances)
    except WaringLabelsError as e:
        return _failure(trial, e)
    return TrialOutcome(trial, decomposition.label)


TRIAL_HANDLERS = MultiDispatcher.MultiDispatcherBuilder() \
    .register(binary_trial) \
    .register(veronese_trial) \
    .register(hypersurface_trial) \
    .build()


def run_trial(spec: EnsembleSpec, trial: int) -> TrialOutcome:
    return TRIAL_HANDLERS.dispatch(spec.geometry, spec, trial, trial_stream(spec.seed, trial))


def ensemble_metadata(spec: EnsembleSpec) -> dict:
    metadata = {"spec": spec.to_json()}
    geometry = spec.geometry
    if isinstance(geometry, Binary):
        metadata["generic_rank"] = generic_complex_rank_binary(geometry.d)
        metadata["weight_bound"] = curve_weight_bound(geometry.d)
    elif isinstance(geometry, Veronese):
        metadata["generic_rank"] = generic_rank(geometry.n, geometry.d)
        metadata["generic_rank_flags"] = generic_rank_flags(geometry.n, geometry.d)
        metadata["weight"] = spec.weight if spec.weight is not None else metadata["generic_rank"] + 1
    return metadata


def survey_labels(spec: EnsembleSpec, threads: int = 1, on_trial_done: Optional[Event] = None) -> LabelHistogram:
    if threads < 1:
        raise ValueError("Thread count must be positive, got {}".format(threads))

    def run_chunk(bounds) -> LabelHistogram:
        partial = LabelHistogram()
        for trial in range(*bounds):
            outcome = run_trial(spec, trial)
            partial.add(outcome)
            if on_trial_done is not None:
                on_trial_done(outcome)
        return partial

    edges = np.linspace(0, spec.trials, min(threads, spec.trials) + 1).astype(int)
    chunks = list(zip(edges[:-1], edges[1:]))
    if len(chunks) == 1:
        partials = [run_chunk(chunks[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
            partials = list(pool.map(run_chunk, chunks))

    histogram = LabelHistogram(metadata=ensemble_metadata(spec))
    for partial in partials:
        histogram = histogram.merge(partial)

    if spec.real_ranks:
        certified = [int(key) for key in histogram.real_rank_counts if key.isdigit()]
        histogram.metadata["real_rank_summary"] = {
            "max_observed": max(certified, default=None),
            "twice_generic_rank": 2 * generic_complex_rank_binary(spec.geometry.d),
        }
    logger.debug("Survey of %d trials: %d failures", spec.trials, histogram.failures)
    return histogram
