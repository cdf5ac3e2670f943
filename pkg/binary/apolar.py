from typing import Iterator

import numpy as np
from scipy.linalg import null_space
from scipy.special import ndtri
from scipy.stats import qmc

from algebra.catalecticant import catalecticant_matrix
from algebra.homogeneous_form import HomogeneousForm
from algebra.tolerances import DEFAULT_TOLERANCES
from errors import DimensionMismatch

DEFAULT_BUDGET = 256


def check_binary(f: HomogeneousForm) -> None:
    if f.n != 1:
        raise DimensionMismatch("Expected a binary form, got {} variables".format(f.n + 1))


def apolar_kernel(f: HomogeneousForm, k: int, rank_tol: float = DEFAULT_TOLERANCES.rank_tol) -> np.ndarray:
    """Orthonormal basis (as columns) of the degree-k forms g = sum_j v_j X^{k-j} Y^j apolar to f.

    Columns are read through ``binary_roots``: the roots of any kernel element are
    candidate decomposition points. Degree d is accepted so the rank search can
    reach the catch-all level.
    """
    check_binary(f)
    if not 1 <= k <= f.d:
        raise ValueError("Kernel degree {} outside [1, {}]".format(k, f.d))
    entries = catalecticant_matrix(f, k).entries
    return null_space(entries, rcond=rank_tol)


def kernel_samples(basis: np.ndarray, budget: int = DEFAULT_BUDGET) -> Iterator[np.ndarray]:
    """Deterministic low-discrepancy walk over the unit sphere of the kernel.

    A one-dimensional kernel yields its single generator; otherwise unscrambled
    Halton points are pushed through the normal quantile function and projected.
    """
    dim = basis.shape[1]
    if dim == 0:
        return
    if dim == 1:
        yield basis[:, 0]
        return
    # the first Halton point is the origin, where the quantile function diverges
    uniform = qmc.Halton(d=dim, scramble=False).random(budget + 1)[1:]
    directions = ndtri(uniform)
    directions /= np.linalg.norm(directions, axis=1, keepdims=True)
    for w in directions:
        yield basis @ w
