import enum
import logging

from algebra.homogeneous_form import HomogeneousForm
from algebra.roots import binary_roots, min_separation
from algebra.tolerances import DEFAULT_TOLERANCES, Tolerances
from binary.apolar import apolar_kernel, check_binary
from labels.label import Label

logger = logging.getLogger(__name__)


class CubicClass(enum.Enum):
    PAIR = "pair"
    REAL = "real"
    TANGENT_DEVELOPABLE = "tangent-developable"

    @property
    def label(self):
        if self is CubicClass.PAIR:
            return Label(1, 0)
        if self is CubicClass.REAL:
            return Label(0, 2)
        return None


def apolar_discriminant(f: HomogeneousForm, tolerances: Tolerances = DEFAULT_TOLERANCES) -> float:
    """g1^2 - 4 g0 g2 of the apolar quadratic g0 X^2 + g1 XY + g2 Y^2, NaN if it is not unique."""
    basis = apolar_kernel(f, 2, tolerances.rank_tol)
    if basis.shape[1] != 1:
        return float("nan")
    g0, g1, g2 = basis[:, 0].real
    return float(g1 * g1 - 4 * g0 * g2)


def classify_cubic(f: HomogeneousForm, tolerances: Tolerances = DEFAULT_TOLERANCES) -> CubicClass:
    """Splits real binary cubics by the roots of their apolar quadratic.

    Two conjugate roots give one conjugate pair, two real roots give two real
    points, a double root (or a non-unique quadratic) is the tangent developable.
    """
    check_binary(f)
    if f.d != 3:
        raise ValueError("Expected a cubic, got degree {}".format(f.d))
    basis = apolar_kernel(f, 2, tolerances.rank_tol)
    if basis.shape[1] != 1:
        return CubicClass.TANGENT_DEVELOPABLE
    g = basis[:, 0].real
    if min_separation(binary_roots(g)) <= tolerances.tau_sep:
        return CubicClass.TANGENT_DEVELOPABLE
    g0, g1, g2 = g
    discriminant = g1 * g1 - 4 * g0 * g2
    logger.debug("Apolar quadratic %s with discriminant %.3e", g, discriminant)
    return CubicClass.PAIR if discriminant < 0 else CubicClass.REAL
