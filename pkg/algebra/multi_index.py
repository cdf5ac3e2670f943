"""Exponent vectors of homogeneous monomials and their vectorised evaluation.

Monomials of a fixed degree are ordered graded-lexicographically with x0
descending: for binary forms index i is the power of the second variable.
"""
import math
from functools import lru_cache
from typing import Dict, Sequence, Tuple

import numpy as np

Exponent = Tuple[int, ...]


@lru_cache(maxsize=None)
def monomial_exponents(n: int, d: int) -> Tuple[Exponent, ...]:
    if n < 0 or d < 0:
        raise ValueError("Invalid monomial space n={}, d={}".format(n, d))
    if n == 0:
        return ((d,),)
    exponents = []
    for first in range(d, -1, -1):
        for rest in monomial_exponents(n - 1, d - first):
            exponents.append((first,) + rest)
    return tuple(exponents)


@lru_cache(maxsize=None)
def monomial_index(n: int, d: int) -> Dict[Exponent, int]:
    return {alpha: i for i, alpha in enumerate(monomial_exponents(n, d))}


@lru_cache(maxsize=None)
def exponent_matrix(n: int, d: int) -> np.ndarray:
    matrix = np.array(monomial_exponents(n, d), dtype=np.int64).reshape(-1, n + 1)
    matrix.flags.writeable = False
    return matrix


def multinomial(alpha: Sequence[int]) -> int:
    value = math.factorial(sum(alpha))
    for a in alpha:
        value //= math.factorial(a)
    return value


@lru_cache(maxsize=None)
def multinomial_weights(n: int, d: int) -> np.ndarray:
    weights = np.array([multinomial(alpha) for alpha in monomial_exponents(n, d)], dtype=np.float64)
    weights.flags.writeable = False
    return weights


@lru_cache(maxsize=None)
def bombieri_weights(n: int, d: int) -> np.ndarray:
    weights = np.sqrt(multinomial_weights(n, d))
    weights.flags.writeable = False
    return weights


def monomial_values(point: np.ndarray, exponents: np.ndarray) -> np.ndarray:
    """Vector of p^alpha over the rows of ``exponents``."""
    return np.prod(np.power(point[None, :], exponents), axis=1)


def monomial_gradients(point: np.ndarray, exponents: np.ndarray) -> np.ndarray:
    """Matrix G with G[i, k] = d(p^alpha_i)/dp_k."""
    count, width = exponents.shape
    gradients = np.zeros((count, width), dtype=np.result_type(point, np.float64))
    for k in range(width):
        active = exponents[:, k] > 0
        if not np.any(active):
            continue
        lowered = exponents[active].copy()
        lowered[:, k] -= 1
        gradients[active, k] = exponents[active, k] * monomial_values(point, lowered)
    return gradients
