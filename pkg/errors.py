from typing import Optional

import numpy as np


class WaringLabelsError(Exception):
    pass


class InvalidFormError(WaringLabelsError, ValueError):
    pass


class DimensionMismatch(WaringLabelsError, ValueError):
    pass


class ZeroPolynomialError(WaringLabelsError, ValueError):
    pass


class PairingFailure(WaringLabelsError):

    def __init__(self, root: complex, distance: float):
        super().__init__(
            "Root {} has no conjugate partner (nearest candidate at distance {:.3e})".format(root, distance)
        )
        self.root = root
        self.distance = distance


class NotSigmaInvariant(WaringLabelsError):
    pass


class DuplicatePoint(WaringLabelsError):
    pass


class NotInSpan(WaringLabelsError):

    def __init__(self, residual: float, tol: float):
        super().__init__("Target is not in the span: residual {:.3e} > tolerance {:.3e}".format(residual, tol))
        self.residual = residual
        self.tol = tol


class RankSearchExhausted(WaringLabelsError):
    pass


class RetriesExhausted(WaringLabelsError):

    def __init__(self, retries: int):
        super().__init__("No transversal line found after {} retries".format(retries))
        self.retries = retries


class DecompositionFailure(WaringLabelsError):

    def __init__(self, message: str, best_residual: float = float("inf"), best_iterate: Optional[np.ndarray] = None):
        super().__init__("{} (best residual {:.3e})".format(message, best_residual))
        self.best_residual = best_residual
        self.best_iterate = best_iterate


class SchemaError(WaringLabelsError, ValueError):

    def __init__(self, path: str, message: str):
        super().__init__("{}: {}".format(path, message))
        self.path = path
