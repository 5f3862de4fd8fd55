import math

from ..base.errors import ValidationError
from ..fiber import FiberSpec, forward_loss

LN2 = math.log(2.0)


def gordon(x: float) -> float:
    """g(x) = (x + 1) log2(x + 1) - x log2(x) in bits, written to stay accurate for large x."""
    if x < 0:
        raise ValidationError(f"the Gordon function needs a non-negative argument, got {x}")
    if x == 0:
        return 0.0
    return math.log1p(x) / LN2 + x * math.log1p(1.0 / x) / LN2


def capacity_quantum(spec: FiberSpec) -> float:
    return gordon(forward_loss(spec) * spec.energy)


def capacity_classical(spec: FiberSpec) -> float:
    """Best of heterodyne, log2(1 + eta E), and homodyne, 1/2 log2(1 + 4 eta E), on the induced Gaussian channel."""
    x = forward_loss(spec) * spec.energy
    return max(math.log1p(x) / LN2, 0.5 * math.log1p(4 * x) / LN2)
