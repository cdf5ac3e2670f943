import logging
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np
from scipy.optimize import minimize

from algebra.homogeneous_form import HomogeneousForm
from algebra.roots import binary_roots, min_separation
from algebra.tolerances import DEFAULT_TOLERANCES, Tolerances
from binary.apolar import DEFAULT_BUDGET, apolar_kernel, check_binary, kernel_samples
from binary.sylvester import complex_rank_binary
from errors import InvalidFormError, RankSearchExhausted, WaringLabelsError
from labels.labeled_set import LabeledSet
from labels.span import Decomposition, span_membership

logger = logging.getLogger(__name__)

# starts handed to the local refinement, best sampled first
_REFINE_STARTS = 3


@dataclass(frozen=True)
class RealRank:
    rank: int
    generator: np.ndarray
    decomposition: Decomposition

    def to_json(self):
        return self.rank


@dataclass(frozen=True)
class Unknown:
    lower_bound: int

    def to_json(self):
        return {"unknown_lower_bound": self.lower_bound}


def _imaginary_mass(g: np.ndarray) -> float:
    """Sum over the roots of their largest imaginary coordinate; zero iff all roots are real."""
    return float(sum(np.max(np.abs(p.coords.imag)) for p in binary_roots(g)))


def _real_certificate(f: HomogeneousForm, g: np.ndarray, tolerances: Tolerances) -> Optional[Decomposition]:
    roots = binary_roots(g)
    if any(not p.is_real_within(tolerances.tau_real) for p in roots):
        return None
    if min_separation(roots) <= tolerances.tau_sep:
        return None
    try:
        labeled_set = LabeledSet([p.as_real() for p in roots], [], tolerances.distinct_tol)
        certificate = span_membership(f, labeled_set, f.d, tolerances.residual_tol, tolerances.rank_tol)
    except WaringLabelsError as e:
        logger.debug("Real-rooted candidate rejected: %s", e)
        return None
    return Decomposition(labeled_set, certificate)


def _refine(basis: np.ndarray, start: np.ndarray) -> np.ndarray:
    weights0 = basis.T @ start
    result = minimize(
        lambda w: _imaginary_mass(basis @ (w / np.linalg.norm(w))),
        weights0,
        method="Nelder-Mead",
        options={"xatol": 1e-10, "fatol": 0.0, "maxiter": 200 * basis.shape[1]},
    )
    return basis @ (result.x / np.linalg.norm(result.x))


def real_rank_binary(
        f: HomogeneousForm,
        budget: int = DEFAULT_BUDGET,
        tolerances: Tolerances = DEFAULT_TOLERANCES
) -> Union[RealRank, Unknown]:
    """Smallest k whose apolar kernel holds a form with k distinct real roots.

    A one-dimensional kernel is decided exactly. A larger kernel that neither the
    sampled search nor the local refinement certifies ends the search with its
    level as lower bound.
    """
    check_binary(f)
    if not f.real_flag:
        raise InvalidFormError("Real rank is defined for real forms")
    try:
        lower = complex_rank_binary(f, tolerances, budget).rank
    except RankSearchExhausted:
        lower = 1

    for k in range(lower, f.d + 1):
        basis = apolar_kernel(f, k, tolerances.rank_tol).real
        if basis.shape[1] == 0:
            continue

        scored = []
        for g in kernel_samples(basis, budget):
            decomposition = _real_certificate(f, g, tolerances)
            if decomposition is not None:
                return RealRank(k, g, decomposition)
            scored.append((_imaginary_mass(g), g))
        if basis.shape[1] == 1:
            logger.debug("Degree %d excluded: the unique apolar form has non-real roots", k)
            continue

        scored.sort(key=lambda entry: entry[0])
        for _, start in scored[:_REFINE_STARTS]:
            g = _refine(basis, start)
            decomposition = _real_certificate(f, g, tolerances)
            if decomposition is not None:
                return RealRank(k, g, decomposition)
        logger.debug("Degree %d neither certified nor excluded within budget %d", k, budget)
        return Unknown(k)

    return Unknown(f.d + 1)
