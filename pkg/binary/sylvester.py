"""Sylvester's algorithm for binary forms.

The complex rank of f is the least k whose apolar kernel holds a square-free
degree-k form; its roots are the points of a Waring decomposition of f.
"""
import logging
from dataclasses import dataclass
from typing import List

import numpy as np

from algebra.homogeneous_form import HomogeneousForm
from algebra.projective_point import ProjectivePoint
from algebra.roots import binary_roots, min_separation
from algebra.tolerances import DEFAULT_TOLERANCES, Tolerances
from binary.apolar import DEFAULT_BUDGET, apolar_kernel, check_binary, kernel_samples
from errors import InvalidFormError, RankSearchExhausted, WaringLabelsError
from labels.labeled_set import label_of
from labels.span import Decomposition, span_membership

logger = logging.getLogger(__name__)

# separation above which a sampled kernel element is accepted without scanning the rest
_COMFORTABLE_SEPARATION = 1e-3


@dataclass(frozen=True)
class RankGenerator:
    rank: int
    generator: np.ndarray
    roots: List[ProjectivePoint]


def generic_complex_rank_binary(d: int) -> int:
    if d < 1:
        raise ValueError("Degree must be positive, got {}".format(d))
    return (d + 2) // 2


def curve_weight_bound(d: int) -> int:
    """Weight every point of the degree-d rational normal curve's span is guaranteed to reach."""
    return (d + 5) // 2


def _square_free_member(basis: np.ndarray, tau_sep: float, budget: int):
    best = None
    best_separation = 0.0
    for g in kernel_samples(basis, budget):
        roots = binary_roots(g)
        separation = min_separation(roots)
        if separation > best_separation:
            best, best_separation = (g, roots), separation
        if best_separation > _COMFORTABLE_SEPARATION:
            break
    if best is not None and best_separation > tau_sep:
        return best
    return None


def complex_rank_binary(
        f: HomogeneousForm,
        tolerances: Tolerances = DEFAULT_TOLERANCES,
        budget: int = DEFAULT_BUDGET
) -> RankGenerator:
    check_binary(f)
    for k in range(1, f.d + 1):
        basis = apolar_kernel(f, k, tolerances.rank_tol)
        logger.debug("Apolar kernel of degree %d has dimension %d", k, basis.shape[1])
        found = _square_free_member(basis, tolerances.tau_sep, budget)
        if found is not None:
            generator, roots = found
            return RankGenerator(k, generator, roots)
    raise RankSearchExhausted("No square-free apolar form up to degree {}".format(f.d))


def sylvester_decompose(
        f: HomogeneousForm,
        tolerances: Tolerances = DEFAULT_TOLERANCES,
        budget: int = DEFAULT_BUDGET
) -> Decomposition:
    check_binary(f)
    if not f.real_flag:
        raise InvalidFormError("Labeled decompositions are defined for real forms")
    rank = complex_rank_binary(f, tolerances, budget)
    labeled_set = label_of(rank.roots, tolerances.tau_real, tolerances.tau_pair, tolerances.distinct_tol)
    certificate = span_membership(f, labeled_set, f.d, tolerances.residual_tol, tolerances.rank_tol)
    logger.debug("Sylvester decomposition of rank %d with label %s", rank.rank, labeled_set.label)
    return Decomposition(labeled_set, certificate)


def curve_weight_check(f: HomogeneousForm, tolerances: Tolerances = DEFAULT_TOLERANCES) -> bool:
    """True iff the Sylvester engine labels f with weight at most floor((d+5)/2)."""
    try:
        decomposition = sylvester_decompose(f, tolerances)
    except WaringLabelsError as e:
        logger.debug("Weight check failed: %s", e)
        return False
    return decomposition.label.weight <= curve_weight_bound(f.d)
