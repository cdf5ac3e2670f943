import argparse
import logging
from dataclasses import replace

import numpy as np

from binary.real_rank import RealRank, real_rank_binary
from binary.sylvester import complex_rank_binary, generic_complex_rank_binary, sylvester_decompose
from cli.output import emit, envelope
from decompose.engine import (
    conjugate_only_decompose,
    conjugate_only_flags,
    decompose_weight,
    decompose_with_template,
    join_decompose,
)
from decompose.generic_rank import generic_rank, generic_rank_flags
from decompose.problem import DecompositionProblem, LabelTemplate
from hypersurface.hypersurface import HypersurfaceInstance, find_label_hypersurface
from resources.config import GlobalConfig, load_config
from resources.form_loader import FormLoader
from survey.survey import survey_labels
from utils.event import Event

logger = logging.getLogger(__name__)


class UsageError(Exception):
    pass


def _config(args: argparse.Namespace) -> GlobalConfig:
    config = load_config(args.config, seed=args.seed)
    if getattr(args, "max_retries", None) is not None:
        config = replace(config, max_retries=args.max_retries)
    return config


def decompose_binary(args: argparse.Namespace) -> int:
    config = _config(args)
    f = FormLoader.load_form(args.form)
    decomposition = sylvester_decompose(f, config.tolerances, config.real_rank_budget)
    result = decomposition.to_json()
    result["complex_rank"] = decomposition.label.weight
    emit(envelope("decompose-binary", config, result), "decomposition")
    return 0


def label_hypersurface(args: argparse.Namespace) -> int:
    config = _config(args)
    instance = HypersurfaceInstance(FormLoader.load_form(args.surface), FormLoader.load_point(args.point))
    rng = np.random.default_rng(np.random.SeedSequence(config.seed))
    decomposition = find_label_hypersurface(instance, rng, config.max_retries, args.prefer_pair, config.tolerances)
    emit(envelope("label-hypersurface", config, decomposition.to_json()), "decomposition")
    return 0


def _parse_template(text: str) -> LabelTemplate:
    try:
        a, b = (int(part) for part in text.split(","))
        return LabelTemplate(a, b)
    except ValueError as e:
        raise UsageError("--template expects 'a,b' with a non-zero label, got {!r} ({})".format(text, e))


def decompose_veronese(args: argparse.Namespace) -> int:
    config = _config(args)
    f = FormLoader.load_form(args.form)
    flags = generic_rank_flags(f.n, f.d)

    if args.template is not None:
        template = _parse_template(args.template)
        if args.weight is not None and args.weight != template.weight:
            raise UsageError("--weight {} disagrees with template {}".format(args.weight, template))
        decomposition = decompose_with_template(DecompositionProblem(f, template, config.nls), config.tolerances)
    elif args.weight is None:
        raise UsageError("one of --weight or --template is required")
    elif args.conjugate_only:
        if args.weight < 2 or args.weight % 2 != 0:
            raise UsageError("--conjugate-only needs an even weight of at least 2, got {}".format(args.weight))
        k = args.weight - 2
        flags += conjugate_only_flags(k)
        decomposition = conjugate_only_decompose(f, k, config.nls, config.tolerances)
    elif args.join:
        if args.weight < 3:
            raise UsageError("--join needs a weight of at least 3, got {}".format(args.weight))
        decomposition = join_decompose(f, args.weight - 1, config.nls, config.tolerances)
    else:
        decomposition = decompose_weight(f, args.weight, args.skip_all_real, config.nls, config.tolerances)

    result = decomposition.to_json()
    result["generic_rank"] = generic_rank(f.n, f.d)
    result["flags"] = flags
    emit(envelope("decompose-veronese", config, result), "decomposition")
    return 0


def rank(args: argparse.Namespace) -> int:
    config = _config(args)
    f = FormLoader.load_form(args.form)
    budget = args.budget if args.budget is not None else config.real_rank_budget
    complex_rank = complex_rank_binary(f, config.tolerances, budget).rank
    real_rank = real_rank_binary(f, budget, config.tolerances)
    result = {
        "complex_rank": complex_rank,
        "real_rank": real_rank.to_json(),
        "generic_rank": generic_complex_rank_binary(f.d),
        "real_decomposition": real_rank.decomposition.to_json() if isinstance(real_rank, RealRank) else None,
    }
    emit(envelope("rank", config, result), "rank")
    return 0


def survey(args: argparse.Namespace) -> int:
    config = _config(args)
    spec = FormLoader.load_ensemble(args.spec, config)
    if args.seed is not None:
        spec = replace(spec, seed=args.seed)

    on_trial_done = Event()
    on_trial_done += lambda outcome: logger.debug(
        "trial %d: %s", outcome.trial, outcome.label if not outcome.failed else outcome.failure
    )
    histogram = survey_labels(spec, args.threads, on_trial_done)

    if args.csv is not None:
        with open(args.csv, "w") as file:
            file.write(histogram.to_csv())
    emit(envelope("survey", replace(config, seed=spec.seed), histogram.to_json()), "survey")
    return 0
