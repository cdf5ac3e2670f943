"""Algebraic starting points for the labeled decomposition search.

The catalecticants H_i of the first derivatives of f = sum c_j l_j^d factor as
U diag(c_j l_j,i) V^T. Projected onto the leading r singular directions of a
random combination H_alpha, the matrices M_i M_alpha^-1 commute and their joint
eigenvalues are the coordinates of the points l_j.
"""
import logging
from functools import lru_cache
from typing import List, Optional, Tuple

import numpy as np
from scipy.optimize import least_squares

from algebra.catalecticant import catalecticant_matrix
from algebra.homogeneous_form import HomogeneousForm, monomial_form, partial_derivative
from algebra.multi_index import exponent_matrix, monomial_exponents, monomial_values, multinomial_weights
from algebra.projective_point import projective_distance
from algebra.tolerances import DEFAULT_TOLERANCES, Tolerances
from decompose.problem import LabelTemplate
from errors import ZeroPolynomialError

logger = logging.getLogger(__name__)

# evaluations allowed to the rank-drop fit of the stripped pairs
_RANK_DROP_EVALUATIONS = 400


def derivative_catalecticants(f: HomogeneousForm) -> List[np.ndarray]:
    k = (f.d - 1) // 2
    shape = (len(monomial_exponents(f.n, f.d - 1 - k)), len(monomial_exponents(f.n, k)))
    slices = []
    for i in range(f.n + 1):
        try:
            slices.append(np.asarray(catalecticant_matrix(partial_derivative(f, i), k).entries))
        except ZeroPolynomialError:
            slices.append(np.zeros(shape))
    return slices


def pencil_points(
        f: HomogeneousForm,
        r: int,
        rng: np.random.Generator,
        tolerances: Tolerances = DEFAULT_TOLERANCES
) -> Optional[np.ndarray]:
    """r unit points, one per row, whose d-th powers carry f; None when the pencil cannot separate r points."""
    if f.d < 3:
        return None
    slices = derivative_catalecticants(f)
    if r > min(slices[0].shape):
        return None

    alpha = rng.standard_normal(f.n + 1)
    combined = sum(a * h for a, h in zip(alpha, slices))
    u, s, vh = np.linalg.svd(combined)
    if s[0] == 0 or s[r - 1] <= tolerances.rank_tol * s[0]:
        logger.debug("Derivative pencil has rank below %d", r)
        return None
    left = u[:, :r].conj().T
    right = vh[:r].conj().T / s[:r]
    pencil = [left @ h @ right for h in slices]

    gamma = rng.standard_normal(f.n + 1)
    _, vectors = np.linalg.eig(sum(g * t for g, t in zip(gamma, pencil)))
    if np.linalg.cond(vectors) * tolerances.rank_tol > 1:
        logger.debug("Derivative pencil is not diagonalizable")
        return None
    inverse = np.linalg.inv(vectors)
    points = np.array([np.diag(inverse @ t @ vectors) for t in pencil]).T
    norms = np.linalg.norm(points, axis=1, keepdims=True)
    if np.any(norms == 0) or not np.all(np.isfinite(points)):
        return None
    return points / norms


def _real_representative(p: np.ndarray) -> np.ndarray:
    p = p / p[int(np.argmax(np.abs(p)))]
    return p.real / np.linalg.norm(p.real)


def assign_to_template(points: np.ndarray, template: LabelTemplate) -> Tuple[np.ndarray, np.ndarray]:
    """Splits weight-many points into b real ones and a pair representatives.

    The b points closest to their conjugates become real; the rest are matched
    greedily with the nearest conjugate and one point of each match is kept.
    """
    if len(points) != template.weight:
        raise ValueError("Template {} needs {} points, got {}".format(template, template.weight, len(points)))
    width = points.shape[1]
    realness = np.array([projective_distance(p, np.conj(p)) for p in points])
    order = np.argsort(realness)
    real_points = np.array([_real_representative(points[i]) for i in order[:template.b]]).reshape(template.b, width)

    remaining = [points[i] for i in order[template.b:]]
    pair_points = []
    while remaining:
        q = remaining.pop(0)
        partner = int(np.argmin([projective_distance(np.conj(q), p) for p in remaining]))
        remaining.pop(partner)
        pair_points.append(q)
    return real_points, np.array(pair_points, dtype=np.complex128).reshape(template.a, width)


@lru_cache(maxsize=None)
def catalecticant_basis(n: int, d: int, k: int) -> np.ndarray:
    """Catalecticants of the monomials of degree d, stacked; C(g) is the contraction with g's coefficients."""
    basis = np.array([catalecticant_matrix(monomial_form(alpha), k).entries for alpha in monomial_exponents(n, d)])
    basis.flags.writeable = False
    return basis


def rank_drop_pairs(
        f: HomogeneousForm,
        kept_weight: int,
        extra: int,
        rng: np.random.Generator
) -> Optional[Tuple[np.ndarray, np.ndarray]]:
    """``extra`` conjugate pair terms whose removal drops the middle catalecticant of f to rank ``kept_weight``.

    Fits y_j, mu_j and an orthonormal kernel V with C(f - sum 2 Re(mu_j y_j^d)) V = 0.
    Returns the unit points y_j and the coefficients mu_j, or None when the
    catalecticant is too small to lose rank.
    """
    n, d = f.n, f.d
    k = d // 2
    basis = catalecticant_basis(n, d, k)
    base = np.tensordot(f.vector.real, basis, axes=1)
    rows, cols = base.shape
    nullity = cols - kept_weight
    if nullity <= 0 or kept_weight >= rows:
        return None
    width = n + 1
    size = np.linalg.norm(f.bombieri_vector()) / (2 * np.sqrt(kept_weight + 2 * extra))
    exponents = exponent_matrix(n, d)
    weights = multinomial_weights(n, d)
    points_end = 2 * extra * width
    coeffs_end = points_end + 2 * extra

    def unpack(x):
        y = (x[:extra * width] + 1j * x[extra * width:points_end]).reshape(extra, width)
        mu = x[points_end:points_end + extra] + 1j * x[points_end + extra:coeffs_end]
        return y, mu, x[coeffs_end:].reshape(cols, nullity)

    def residuals(x):
        y, mu, kernel = unpack(x)
        pairs = sum(2 * (c * weights * monomial_values(q, exponents)).real for c, q in zip(mu, y))
        reduced = base - np.tensordot(pairs, basis, axes=1)
        return np.concatenate([(reduced @ kernel).ravel(), (kernel.T @ kernel - np.eye(nullity)).ravel()])

    y0 = rng.standard_normal((extra, width)) + 1j * rng.standard_normal((extra, width))
    y0 /= np.linalg.norm(y0, axis=1, keepdims=True)
    mu0 = size * (rng.standard_normal(extra) + 1j * rng.standard_normal(extra)) / np.sqrt(2)
    kernel0, _ = np.linalg.qr(rng.standard_normal((cols, nullity)))
    x0 = np.concatenate([y0.real.ravel(), y0.imag.ravel(), mu0.real, mu0.imag, kernel0.ravel()])

    fit = least_squares(residuals, x0, method="trf", max_nfev=_RANK_DROP_EVALUATIONS)
    y, mu, _ = unpack(fit.x)
    norms = np.linalg.norm(y, axis=1)
    if np.any(norms == 0) or not np.all(np.isfinite(fit.x)):
        return None
    logger.debug("Rank-drop fit of %d pairs: cost %.3e after %d evaluations", extra, fit.cost, fit.nfev)
    return y / norms[:, None], mu * norms ** d
