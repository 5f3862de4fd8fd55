import enum
import math
import typing as T
from dataclasses import dataclass, field

import numpy as np

from ..base.errors import ValidationError


class Functional(enum.Enum):
    IDENTITY = "identity"
    LOG1P_SCALED = "log1p_scaled"

    @classmethod
    def parse(cls, value: T.Union[str, "Functional"]) -> "Functional":
        if isinstance(value, Functional):
            return value
        try:
            return cls(value)
        except ValueError:
            raise ValidationError(f"unknown functional {value!r}, expected one of {[f.value for f in cls]}")

    def apply(self, x: np.ndarray, energy: float) -> np.ndarray:
        if self is Functional.IDENTITY:
            return np.asarray(x, dtype=np.float64)
        return np.log1p(energy * np.asarray(x, dtype=np.float64))


@dataclass(frozen=True, eq=False)
class SpectrumReport:
    n: int
    eigenvalues: np.ndarray
    sym_min: float
    sym_max: float
    residual: float = 0.0

    @property
    def max_eigenvalue(self) -> float:
        return float(self.eigenvalues[-1])

    @property
    def min_eigenvalue(self) -> float:
        return float(self.eigenvalues[0])


@dataclass(frozen=True)
class Extremum:
    xi: float
    value: float


@dataclass
class SzegoResult:
    functional: Functional
    energy: float
    limit_value: float
    quadrature_nodes: int
    finite_n_values: T.List[T.Tuple[int, float]] = field(default_factory=list)

    def __post_init__(self):
        if not math.isfinite(self.limit_value):
            raise ValidationError(f"Szego limit is not finite: {self.limit_value}")

    def gaps(self) -> T.List[T.Tuple[int, float]]:
        return [(n, abs(value - self.limit_value)) for n, value in self.finite_n_values]

    def relative_gaps(self) -> T.List[T.Tuple[int, float]]:
        scale = abs(self.limit_value)
        return [(n, gap / scale if scale > 0 else gap) for n, gap in self.gaps()]
