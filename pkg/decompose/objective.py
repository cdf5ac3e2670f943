"""Residual of a labeled decomposition in Bombieri coordinates, with its analytic Jacobian.

The model is sum_i l_i w*p_i^alpha + sum_j 2 Re(mu_j w*q_j^alpha), w = sqrt(multinomial),
so the euclidean norm of the residual is the Bombieri norm of the difference of forms.
"""
from typing import Tuple

import numpy as np

from algebra.multi_index import bombieri_weights, exponent_matrix, monomial_gradients, monomial_values
from decompose.problem import DecompositionProblem, LabelTemplate, Parameters


def model_vector(n: int, d: int, parameters: Parameters) -> np.ndarray:
    exponents = exponent_matrix(n, d)
    weights = bombieri_weights(n, d)
    model = np.zeros(exponents.shape[0])
    for coefficient, p in zip(parameters.real_coeffs, parameters.real_points):
        model += coefficient * monomial_values(p, exponents)
    for coefficient, q in zip(parameters.pair_coeffs, parameters.pair_points):
        model += 2 * (coefficient * monomial_values(q, exponents)).real
    return weights * model


def term_norms(n: int, d: int, parameters: Parameters) -> np.ndarray:
    """Bombieri norm of each summand, real points first."""
    exponents = exponent_matrix(n, d)
    weights = bombieri_weights(n, d)
    norms = [abs(c) * np.linalg.norm(weights * monomial_values(p, exponents))
             for c, p in zip(parameters.real_coeffs, parameters.real_points)]
    norms += [np.linalg.norm(2 * (c * weights * monomial_values(q, exponents)).real)
              for c, q in zip(parameters.pair_coeffs, parameters.pair_points)]
    return np.array(norms)


def residual_and_gradient(problem: DecompositionProblem, params: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    return residual_and_jacobian(problem.template, problem.n, problem.d, problem.target, params)


def residual_and_jacobian(
        template: LabelTemplate,
        n: int,
        d: int,
        target: np.ndarray,
        params: np.ndarray
) -> Tuple[np.ndarray, np.ndarray]:
    parameters = template.unpack(params, n)
    exponents = exponent_matrix(n, d)
    weights = bombieri_weights(n, d)[:, None]
    width = n + 1
    a, b = template.a, template.b

    residual = model_vector(n, d, parameters) - target
    jacobian = np.zeros((exponents.shape[0], params.size))

    real_point_cols = 0
    pair_re_cols = b * width
    pair_im_cols = pair_re_cols + a * width
    real_coeff_cols = pair_im_cols + a * width
    mu_re_cols = real_coeff_cols + b
    mu_im_cols = mu_re_cols + a

    for i, (coefficient, p) in enumerate(zip(parameters.real_coeffs, parameters.real_points)):
        gradients = weights * monomial_gradients(p, exponents)
        start = real_point_cols + i * width
        jacobian[:, start:start + width] = coefficient * gradients
        jacobian[:, real_coeff_cols + i] = weights[:, 0] * monomial_values(p, exponents)

    for j, (coefficient, q) in enumerate(zip(parameters.pair_coeffs, parameters.pair_points)):
        gradients = coefficient * weights * monomial_gradients(q, exponents)
        start = j * width
        jacobian[:, pair_re_cols + start:pair_re_cols + start + width] = 2 * gradients.real
        jacobian[:, pair_im_cols + start:pair_im_cols + start + width] = -2 * gradients.imag
        values = weights[:, 0] * monomial_values(q, exponents)
        jacobian[:, mu_re_cols + j] = 2 * values.real
        jacobian[:, mu_im_cols + j] = -2 * values.imag

    return residual, jacobian
