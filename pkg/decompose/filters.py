import enum
import logging

from algebra.catalecticant import catalecticant
from algebra.homogeneous_form import HomogeneousForm
from algebra.tolerances import DEFAULT_TOLERANCES

logger = logging.getLogger(__name__)


class SecantVerdict(enum.Enum):
    POSSIBLE = "possible"
    IMPOSSIBLE = "impossible"


def secant_membership_filter(f: HomogeneousForm, k: int, rank_tol: float = DEFAULT_TOLERANCES.rank_tol) -> SecantVerdict:
    """Necessary condition for f to lie on the k-th secant variety: every catalecticant has rank <= k."""
    if k < 1:
        raise ValueError("Secant index must be positive, got {}".format(k))
    for j in range(1, f.d):
        matrix = catalecticant(f, j)
        if min(matrix.shape) <= k:
            continue
        rank = matrix.rank(rank_tol)
        if rank > k:
            logger.debug("Catalecticant of bidegree (%d, %d) has rank %d > %d", f.d - j, j, rank, k)
            return SecantVerdict.IMPOSSIBLE
    return SecantVerdict.POSSIBLE
