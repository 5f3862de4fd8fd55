import math
import typing as T
from dataclasses import dataclass

import numpy as np
import scipy.integrate
import scipy.optimize

from ..base.errors import ValidationError

Pdf = T.Callable[[float], float]


@dataclass(frozen=True)
class ChernoffResult:
    information: float
    weight: float


def chernoff_gaussian(mu0: float, mu1: float, variance: float) -> float:
    """Chernoff information between N(mu0, variance) and N(mu1, variance): (mu1 - mu0)^2 / (8 variance)."""
    if variance <= 0:
        raise ValidationError(f"variance must be positive, got {variance}")
    return (mu1 - mu0) ** 2 / (8 * variance)


def chernoff_information(pdf0: Pdf, pdf1: Pdf,
                         lower: float = -np.inf, upper: float = np.inf) -> ChernoffResult:
    """max over lambda in [0, 1] of -ln int pdf0^lambda pdf1^(1 - lambda), by quadrature."""
    def coefficient(lam: float) -> float:
        value, _ = scipy.integrate.quad(lambda x: pdf0(x) ** lam * pdf1(x) ** (1 - lam), lower, upper,
                                        limit=200)
        return value

    result = scipy.optimize.minimize_scalar(coefficient, bounds=(0.0, 1.0), method="bounded",
                                            options={"xatol": 1e-10})
    value = min(float(result.fun), 1.0)
    return ChernoffResult(-math.log(value), float(result.x))
