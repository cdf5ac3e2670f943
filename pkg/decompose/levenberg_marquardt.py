import logging
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple

import numpy as np

from decompose.problem import NLSConfig

logger = logging.getLogger(__name__)

ResidualFunction = Callable[[np.ndarray], Tuple[np.ndarray, np.ndarray]]

# damping beyond which no step can make progress
_LAMBDA_CEILING = 1e16
# floor on the Marquardt scaling of a column
_SCALE_FLOOR = 1e-12


@dataclass
class LMResult:
    params: np.ndarray
    residual: float
    converged: bool
    iterations: int
    cost_history: List[float] = field(default_factory=list)
    damping: float = 0.0


def levenberg_marquardt(
        fun: ResidualFunction,
        x0: np.ndarray,
        config: NLSConfig,
        target_norm: float = 1.0,
        free: Optional[np.ndarray] = None
) -> LMResult:
    """Minimises ||r(x)||^2 / 2 over the coordinates flagged in ``free``.

    Marquardt damping diag(J^T J); a step is accepted only on strict decrease of
    the cost. Convergence means ||r|| <= residual_tol * target_norm.
    """
    x = np.array(x0, dtype=np.float64)
    free = np.ones(x.size, dtype=bool) if free is None else np.asarray(free, dtype=bool)
    lam = config.lambda_init

    r, jacobian = fun(x)
    cost = 0.5 * float(r @ r)
    history = [cost]
    threshold = config.residual_tol * target_norm

    iteration = 0
    while iteration < config.max_iters:
        if np.sqrt(2 * cost) <= threshold:
            break
        j_free = jacobian[:, free]
        gradient = j_free.T @ r
        if np.max(np.abs(gradient), initial=0.0) <= config.gradient_tol:
            logger.debug("Gradient vanished after %d iterations", iteration)
            break

        scale = np.sqrt(np.maximum(np.sum(j_free * j_free, axis=0), _SCALE_FLOOR))
        accepted = False
        while lam < _LAMBDA_CEILING:
            augmented = np.vstack([j_free, np.sqrt(lam) * np.diag(scale)])
            rhs = np.concatenate([-r, np.zeros(scale.size)])
            step, _, _, _ = np.linalg.lstsq(augmented, rhs, rcond=None)
            candidate = x.copy()
            candidate[free] += step
            r_new, jacobian_new = fun(candidate)
            cost_new = 0.5 * float(r_new @ r_new)
            if np.isfinite(cost_new) and cost_new < cost:
                x, r, jacobian, cost = candidate, r_new, jacobian_new, cost_new
                lam = max(lam / 3, 1e-15)
                accepted = True
                break
            lam *= 2
        iteration += 1
        if not accepted:
            logger.debug("Damping exhausted after %d iterations", iteration)
            break
        history.append(cost)

    residual = np.sqrt(2 * cost) / target_norm if target_norm > 0 else np.sqrt(2 * cost)
    return LMResult(x, float(residual), bool(np.sqrt(2 * cost) <= threshold), iteration, history, float(lam))
