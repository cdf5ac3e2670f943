import math
from typing import List

OUTSIDE_HYPOTHESES = "outside-theorem-hypotheses"
UNIQUENESS_EXCEPTION = "uniqueness-exception"
DEFECTIVE = "defective"

_UNIQUENESS_EXCEPTIONS = frozenset({(2, 6), (3, 4), (5, 3)})
# Veronese varieties whose secant varieties fill later than the expected count
_DEFECTIVE = frozenset({(2, 4), (3, 4), (4, 4), (4, 3)})


def generic_rank(n: int, d: int) -> int:
    """ceil(C(n+d, n) / (n+1)), the expected generic rank of degree-d forms in n+1 variables."""
    if n < 0 or d < 0:
        raise ValueError("Invalid Veronese shape n={}, d={}".format(n, d))
    return -(-math.comb(n + d, n) // (n + 1))


def generic_rank_flags(n: int, d: int) -> List[str]:
    flags = []
    if n < 1 or d < 3:
        flags.append(OUTSIDE_HYPOTHESES)
    if (n, d) in _UNIQUENESS_EXCEPTIONS:
        flags.append(UNIQUENESS_EXCEPTION)
    if (n, d) in _DEFECTIVE:
        flags.append(DEFECTIVE)
    return flags
