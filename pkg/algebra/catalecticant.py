import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from algebra.homogeneous_form import HomogeneousForm
from algebra.multi_index import Exponent, monomial_exponents, monomial_index
from algebra.tolerances import DEFAULT_TOLERANCES


@dataclass(frozen=True)
class CatalecticantMatrix:
    n: int
    d: int
    k: int
    row_exponents: Tuple[Exponent, ...]
    col_exponents: Tuple[Exponent, ...]
    entries: np.ndarray

    @property
    def shape(self) -> Tuple[int, int]:
        return self.entries.shape

    def rank(self, tol: float = DEFAULT_TOLERANCES.rank_tol) -> int:
        return numeric_rank(self.entries, tol)


def _factorial_ratio(alpha: Exponent, beta: Exponent, gamma: Exponent) -> int:
    value = 1
    for a, b, c in zip(alpha, beta, gamma):
        value *= math.factorial(a) // (math.factorial(b) * math.factorial(c))
    return value


def catalecticant_matrix(f: HomogeneousForm, k: int) -> CatalecticantMatrix:
    """Apolarity pairing matrix; accepts the degenerate bidegrees k = 0 and k = d."""
    if not 0 <= k <= f.d:
        raise ValueError("Contraction degree {} outside [0, {}]".format(k, f.d))
    rows = monomial_exponents(f.n, f.d - k)
    cols = monomial_exponents(f.n, k)
    index = monomial_index(f.n, f.d)
    if f.n == 1:
        # pure Hankel matrix in the scaled coefficients
        scaled = f.scaled_vector()
        entries = np.array([[scaled[i + j] for j in range(k + 1)] for i in range(f.d - k + 1)])
    else:
        raw = f.vector
        entries = np.empty((len(rows), len(cols)), dtype=np.complex128)
        for i, beta in enumerate(rows):
            for j, gamma in enumerate(cols):
                alpha = tuple(b + c for b, c in zip(beta, gamma))
                entries[i, j] = raw[index[alpha]] * _factorial_ratio(alpha, beta, gamma)
    if f.real_flag:
        entries = entries.real
    entries.flags.writeable = False
    return CatalecticantMatrix(f.n, f.d, k, rows, cols, entries)


def catalecticant(f: HomogeneousForm, k: int) -> CatalecticantMatrix:
    if not 1 <= k <= f.d - 1:
        raise ValueError("Contraction degree {} outside [1, {}]".format(k, f.d - 1))
    return catalecticant_matrix(f, k)


def numeric_rank(matrix: np.ndarray, tol: float = DEFAULT_TOLERANCES.rank_tol) -> int:
    matrix = np.asarray(matrix)
    if matrix.size == 0:
        return 0
    singular_values = np.linalg.svd(matrix, compute_uv=False)
    if singular_values[0] == 0:
        return 0
    return int(np.count_nonzero(singular_values > tol * singular_values[0]))
