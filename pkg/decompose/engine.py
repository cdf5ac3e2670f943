"""Labeled Waring decompositions of real forms by structured nonlinear least squares."""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Tuple

import numpy as np

from algebra.homogeneous_form import HomogeneousForm
from algebra.multi_index import exponent_matrix, monomial_values, multinomial_weights
from algebra.projective_point import ProjectivePoint
from algebra.tolerances import DEFAULT_TOLERANCES, Tolerances
from decompose.filters import SecantVerdict, secant_membership_filter
from decompose.initialization import assign_to_template, pencil_points, rank_drop_pairs
from decompose.levenberg_marquardt import LMResult, levenberg_marquardt
from decompose.objective import residual_and_jacobian, term_norms
from decompose.problem import DecompositionProblem, LabelTemplate, NLSConfig, Parameters
from errors import DecompositionFailure, WaringLabelsError
from labels.label import templates_of_weight
from labels.labeled_set import label_of
from labels.span import Decomposition, fit_coefficients, span_membership

logger = logging.getLogger(__name__)

SeedFunction = Callable[[np.random.Generator], Parameters]

SMALL_CONJUGATE_INDEX = "k-below-4"

# iterations spent on the lower-weight solve that seeds a join
_SEED_ITERS = 100
# iterations between two re-gaugings of the point pivots
_SEGMENT_ITERS = 50


def restart_rng(seed: int, template: LabelTemplate, index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(0, template.a, template.b, index)))


def _unit_rows(x: np.ndarray) -> np.ndarray:
    return x / np.linalg.norm(x, axis=1, keepdims=True)


def random_points(template: LabelTemplate, n: int, rng: np.random.Generator) -> Tuple[np.ndarray, np.ndarray]:
    real_points = _unit_rows(rng.standard_normal((template.b, n + 1)))
    pair_points = _unit_rows(
        rng.standard_normal((template.a, n + 1)) + 1j * rng.standard_normal((template.a, n + 1))
    )
    return real_points, pair_points


def fitted_parameters(
        f: HomogeneousForm,
        real_points: np.ndarray,
        pair_points: np.ndarray,
        tolerances: Tolerances = DEFAULT_TOLERANCES
) -> Parameters:
    fit = fit_coefficients(f, list(real_points), list(pair_points), tolerances.rank_tol)
    return Parameters(
        np.asarray(real_points, dtype=np.float64).reshape(-1, f.n + 1),
        np.asarray(pair_points, dtype=np.complex128).reshape(-1, f.n + 1),
        fit.real_coeffs,
        fit.pair_coeffs,
    )


def random_start(problem: DecompositionProblem, rng: np.random.Generator,
                 tolerances: Tolerances = DEFAULT_TOLERANCES) -> Parameters:
    real_points, pair_points = random_points(problem.template, problem.n, rng)
    return fitted_parameters(problem.f, real_points, pair_points, tolerances)


def pencil_start(problem: DecompositionProblem, rng: np.random.Generator,
                 tolerances: Tolerances = DEFAULT_TOLERANCES) -> Optional[Parameters]:
    """Points read off the derivative pencil of f, split by the template; None if f hides them."""
    points = pencil_points(problem.f, problem.template.weight, rng, tolerances)
    if points is None:
        return None
    real_points, pair_points = assign_to_template(points, problem.template)
    return fitted_parameters(problem.f, real_points, pair_points, tolerances)


def gauge_fix(template: LabelTemplate, parameters: Parameters, d: int) -> Tuple[np.ndarray, np.ndarray]:
    """Scales every point so its largest coordinate is 1 and freezes that coordinate.

    Returns the packed parameters and the mask of free coordinates.
    """
    real_points = np.array(parameters.real_points, dtype=np.float64)
    pair_points = np.array(parameters.pair_points, dtype=np.complex128)
    real_coeffs = np.array(parameters.real_coeffs, dtype=np.float64)
    pair_coeffs = np.array(parameters.pair_coeffs, dtype=np.complex128)
    real_mask = np.ones_like(real_points)
    pair_mask = np.full(pair_points.shape, 1 + 1j)

    for i, p in enumerate(real_points):
        pivot = int(np.argmax(np.abs(p)))
        scale = p[pivot]
        real_points[i] = p / scale
        real_coeffs[i] *= scale ** d
        real_mask[i, pivot] = 0
    for j, q in enumerate(pair_points):
        pivot = int(np.argmax(np.abs(q)))
        scale = q[pivot]
        pair_points[j] = q / scale
        pair_coeffs[j] *= scale ** d
        pair_mask[j, pivot] = 0

    packed = template.pack(Parameters(real_points, pair_points, real_coeffs, pair_coeffs))
    free = template.pack(Parameters(real_mask, pair_mask, np.ones(template.b), np.full(template.a, 1 + 1j))) != 0
    return packed, free


def solve(problem: DecompositionProblem, parameters: Parameters, config: Optional[NLSConfig] = None) -> LMResult:
    """Levenberg-Marquardt in segments; each segment re-freezes the current largest coordinate of every point.

    The damping reached by one segment starts the next.
    """
    config = config or problem.config
    template, n, d = problem.template, problem.n, problem.d
    target = problem.target
    target_norm = float(np.linalg.norm(target))
    segment_config = config
    history: List[float] = []
    iterations = 0
    while True:
        budget = min(_SEGMENT_ITERS, config.max_iters - iterations)
        x0, free = gauge_fix(template, parameters, d)
        result = levenberg_marquardt(
            lambda x: residual_and_jacobian(template, n, d, target, x),
            x0,
            segment_config.with_changes(max_iters=budget),
            target_norm,
            free,
        )
        history += result.cost_history[1:] if history else result.cost_history
        iterations += result.iterations
        if result.converged or result.iterations < budget or iterations >= config.max_iters:
            break
        parameters = template.unpack(result.params, n)
        segment_config = config.with_changes(lambda_init=max(result.damping, 1e-15))
    return LMResult(result.params, result.residual, result.converged, iterations, history, result.damping)


def accept(problem: DecompositionProblem, params: np.ndarray,
           tolerances: Tolerances = DEFAULT_TOLERANCES) -> Optional[Decomposition]:
    """The decomposition behind ``params`` if it carries exactly the template's label."""
    template, n, d = problem.template, problem.n, problem.d
    parameters = template.unpack(params, n)

    norms = term_norms(n, d, parameters)
    target_norm = np.linalg.norm(problem.target)
    if norms.size and np.min(norms) <= problem.config.residual_tol * target_norm:
        logger.debug("Template %s: a summand vanished", template)
        return None

    try:
        points = [ProjectivePoint(p) for p in parameters.real_points]
        points += [ProjectivePoint(q) for q in parameters.pair_points]
        points += [ProjectivePoint(np.conj(q)) for q in parameters.pair_points]
        labeled_set = label_of(points, tolerances.tau_real, tolerances.tau_pair, tolerances.distinct_tol)
    except (WaringLabelsError, ValueError) as e:
        logger.debug("Template %s: %s", template, e)
        return None
    if labeled_set.label != template.label:
        logger.debug("Template %s: points relabeled as %s", template, labeled_set.label)
        return None

    try:
        certificate = span_membership(problem.f, labeled_set, d, problem.config.residual_tol, tolerances.rank_tol)
    except WaringLabelsError as e:
        logger.debug("Template %s: %s", template, e)
        return None
    return Decomposition(labeled_set, certificate)


def decompose_with_template(
        problem: DecompositionProblem,
        tolerances: Tolerances = DEFAULT_TOLERANCES,
        seeds: Optional[SeedFunction] = None,
        check_filter: bool = True
) -> Decomposition:
    """Levenberg-Marquardt from ``restarts`` starts; the lowest successful restart index wins.

    Restart 0 starts from the derivative pencil when f exposes enough points,
    every other restart from random points unless ``seeds`` is given.
    """
    config, template = problem.config, problem.template
    if check_filter and secant_membership_filter(problem.f, template.weight, tolerances.rank_tol) is SecantVerdict.IMPOSSIBLE:
        raise DecompositionFailure("Catalecticant rank exceeds the weight of template {}".format(template))

    def starting_point(index: int, rng: np.random.Generator) -> Parameters:
        if seeds is not None:
            return seeds(rng)
        if index == 0:
            parameters = pencil_start(problem, rng, tolerances)
            if parameters is not None:
                return parameters
        return random_start(problem, rng, tolerances)

    def attempt(index: int) -> Tuple[Optional[Decomposition], LMResult]:
        rng = restart_rng(config.seed, template, index)
        parameters = starting_point(index, rng)
        result = solve(problem, parameters)
        logger.debug("Template %s restart %d: residual %.3e after %d iterations",
                     template, index, result.residual, result.iterations)
        if not result.converged:
            return None, result
        return accept(problem, result.params, tolerances), result

    best_residual, best_iterate = float("inf"), None
    pool = ThreadPoolExecutor(max_workers=config.workers) if config.workers > 1 else None
    try:
        for start in range(0, config.restarts, config.workers):
            indices = list(range(start, min(config.restarts, start + config.workers)))
            outcomes = list(pool.map(attempt, indices)) if pool is not None else [attempt(i) for i in indices]
            for index, (decomposition, result) in zip(indices, outcomes):
                if decomposition is not None:
                    logger.debug("Template %s solved at restart %d", template, index)
                    return decomposition
                if result.residual < best_residual:
                    best_residual, best_iterate = result.residual, result.params
    finally:
        if pool is not None:
            pool.shutdown()

    raise DecompositionFailure(
        "No restart produced a decomposition with label {}".format(template), best_residual, best_iterate
    )


def decompose_weight(
        f: HomogeneousForm,
        w: int,
        skip_all_real: bool = False,
        config: NLSConfig = NLSConfig(),
        tolerances: Tolerances = DEFAULT_TOLERANCES
) -> Decomposition:
    if w < 1:
        raise ValueError("Weight must be positive, got {}".format(w))
    if secant_membership_filter(f, w, tolerances.rank_tol) is SecantVerdict.IMPOSSIBLE:
        raise DecompositionFailure("Catalecticant rank exceeds weight {}".format(w))

    best = float("inf")
    for label in templates_of_weight(w, skip_all_real):
        problem = DecompositionProblem(f, LabelTemplate.from_label(label), config)
        try:
            return decompose_with_template(problem, tolerances, check_filter=False)
        except DecompositionFailure as e:
            best = min(best, e.best_residual)
    raise DecompositionFailure("No template of weight {} succeeded".format(w), best)


def _removed_pairs_seed(
        f: HomogeneousForm,
        base: LabelTemplate,
        extra: int,
        config: NLSConfig,
        tolerances: Tolerances
) -> SeedFunction:
    """Start for template (base.a + extra, base.b): strip ``extra`` conjugate pairs from f,
    fit the base template to what is left, then put the pairs back.

    The stripped pairs are chosen so the middle catalecticant of the remainder
    drops to the base weight; random pairs stand in when it is too small for that.
    """
    n, d = f.n, f.d
    exponents = exponent_matrix(n, d)
    weights = multinomial_weights(n, d)
    size = np.linalg.norm(f.bombieri_vector()) / (2 * np.sqrt(base.weight + 2 * extra))
    seed_config = config.with_changes(max_iters=min(config.max_iters, _SEED_ITERS))

    def seed(rng: np.random.Generator) -> Parameters:
        dropped = rank_drop_pairs(f, base.weight, extra, rng)
        if dropped is None:
            _, extra_points = random_points(LabelTemplate(extra, 0), n, rng)
            mu = size * (rng.standard_normal(extra) + 1j * rng.standard_normal(extra)) / np.sqrt(2)
        else:
            extra_points, mu = dropped
        remainder = f.vector.real.copy()
        for coefficient, y in zip(mu, extra_points):
            remainder -= 2 * (coefficient * weights * monomial_values(y, exponents)).real
        reduced = HomogeneousForm.from_vector(n, d, remainder)

        base_problem = DecompositionProblem(reduced, base, seed_config)
        start = pencil_start(base_problem, rng, tolerances)
        if start is None:
            start = random_start(base_problem, rng, tolerances)
        result = solve(base_problem, start)
        fitted = base.unpack(result.params, n)
        pair_points = np.vstack([fitted.pair_points.reshape(-1, n + 1), extra_points])
        return fitted_parameters(f, fitted.real_points, pair_points, tolerances)

    return seed


def join_decompose(
        f: HomogeneousForm,
        k: int,
        config: NLSConfig = NLSConfig(),
        tolerances: Tolerances = DEFAULT_TOLERANCES
) -> Decomposition:
    """Weight k+1 decompositions grown from weight k-1 ones by one extra conjugate pair.

    When no template (a+1, b) works, the honest weight k-1 label is returned instead.
    """
    if k < 2:
        raise ValueError("Join index must be at least 2, got {}".format(k))
    best = float("inf")
    for base_label in templates_of_weight(k - 1):
        base = LabelTemplate.from_label(base_label)
        problem = DecompositionProblem(f, LabelTemplate(base.a + 1, base.b), config)
        try:
            return decompose_with_template(problem, tolerances, seeds=_removed_pairs_seed(f, base, 1, config, tolerances))
        except DecompositionFailure as e:
            best = min(best, e.best_residual)

    logger.info("No weight %d join decomposition; trying weight %d", k + 1, k - 1)
    try:
        return decompose_weight(f, k - 1, config=config, tolerances=tolerances)
    except DecompositionFailure as e:
        raise DecompositionFailure("No join decomposition of weight {}".format(k + 1), min(best, e.best_residual))


def conjugate_only_flags(k: int) -> List[str]:
    return [SMALL_CONJUGATE_INDEX] if k < 4 else []


def conjugate_only_decompose(
        f: HomogeneousForm,
        k: int,
        config: NLSConfig = NLSConfig(),
        tolerances: Tolerances = DEFAULT_TOLERANCES
) -> Decomposition:
    """Decomposition with label (k/2 + 1, 0): conjugate pairs only, no real point."""
    if k < 0 or k % 2 != 0:
        raise ValueError("Conjugate-only index must be even and non-negative, got {}".format(k))
    for flag in conjugate_only_flags(k):
        logger.warning("Conjugate-only search at k=%d is flagged %s", k, flag)

    template = LabelTemplate(k // 2 + 1, 0)
    seeds = None
    if k >= 4:
        seeds = _removed_pairs_seed(f, LabelTemplate(k // 2 - 1, 0), 2, config, tolerances)
    return decompose_with_template(DecompositionProblem(f, template, config), tolerances, seeds=seeds)
