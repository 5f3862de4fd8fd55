import math
import numbers
import typing as T
from dataclasses import dataclass, field

import numpy as np

from ..base.errors import ValidationError

BASELINE = "baseline"


@dataclass(frozen=True)
class FiberSpec:
    """Baseline channel state s=0: L concatenated blocks with transmissivity tau_i and pickup split theta_i."""
    L: int
    tau: T.Tuple[float, ...]
    theta: T.Tuple[float, ...]
    energy: float

    def __post_init__(self):
        if isinstance(self.L, bool) or not isinstance(self.L, numbers.Integral) or self.L < 1:
            raise ValidationError(f"L must be a positive integer, got {self.L!r}")
        object.__setattr__(self, "L", int(self.L))
        object.__setattr__(self, "tau", tuple(float(t) for t in self.tau))
        object.__setattr__(self, "theta", tuple(float(t) for t in self.theta))
        object.__setattr__(self, "energy", float(self.energy))
        if len(self.tau) != self.L or len(self.theta) != self.L:
            raise ValidationError(f"tau and theta must have length L={self.L}, "
                                  f"got {len(self.tau)} and {len(self.theta)}")
        for i, t in enumerate(self.tau, 1):
            if not 0 < t <= 1:
                raise ValidationError(f"tau_{i}={t} must lie in (0, 1]")
        for i, t in enumerate(self.theta, 1):
            if not 0 <= t <= 1:
                raise ValidationError(f"theta_{i}={t} must lie in [0, 1]")
        if not math.isfinite(self.energy) or self.energy < 0:
            raise ValidationError(f"energy must be a finite non-negative number, got {self.energy}")

    @classmethod
    def uniform(cls, L: int, tau: float, theta: float, energy: float) -> "FiberSpec":
        return cls(L, (tau,) * L, (theta,) * L, energy)

    @property
    def tau_array(self) -> np.ndarray:
        return np.array(self.tau, dtype=np.float64)

    @property
    def theta_array(self) -> np.ndarray:
        return np.array(self.theta, dtype=np.float64)

    @property
    def band(self) -> int:
        return 2 * self.L


@dataclass(frozen=True)
class AttackSpec:
    """Single-block perturbation T_p(a, b): block p gets transmissivity a and pickup split b."""
    position: int
    tau: float
    theta: float

    def __post_init__(self):
        if isinstance(self.position, bool) or not isinstance(self.position, numbers.Integral):
            raise ValidationError(f"attack position must be an integer, got {self.position!r}")
        object.__setattr__(self, "position", int(self.position))
        object.__setattr__(self, "tau", float(self.tau))
        object.__setattr__(self, "theta", float(self.theta))
        if not 0 <= self.tau <= 1:
            raise ValidationError(f"attack tau={self.tau} must lie in [0, 1]")
        if not 0 <= self.theta <= 1:
            raise ValidationError(f"attack theta={self.theta} must lie in [0, 1]")

    def validate_against(self, spec: FiberSpec) -> None:
        if not 1 <= self.position <= spec.L:
            raise ValidationError(f"attack position {self.position} is outside [1, {spec.L}]")
        baseline = spec.tau[self.position - 1]
        if self.tau > baseline:
            raise ValidationError(f"attack tau={self.tau} exceeds baseline tau={baseline} at position "
                                  f"{self.position}: an attacker never increases transmissivity")

    def label(self) -> str:
        return f"attack(p={self.position}, tau={self.tau!r}, theta={self.theta!r})"


@dataclass(frozen=True, eq=False)
class BackscatterResponse:
    """Return-channel impulse response; coeffs[k - 1] holds a_k for delays k = 1..2L."""
    coeffs: np.ndarray
    state_label: str = BASELINE

    def __post_init__(self):
        coeffs = np.array(self.coeffs, dtype=np.float64)
        if coeffs.ndim != 1 or len(coeffs) == 0 or len(coeffs) % 2:
            raise ValidationError("a back-scatter response needs 2L coefficients")
        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def L(self) -> int:
        return len(self.coeffs) // 2

    def a(self, k: int) -> float:
        """Coefficient at delay k, zero outside 1..2L."""
        if 1 <= k <= len(self.coeffs):
            return float(self.coeffs[k - 1])
        return 0.0

    def delay_indexed(self) -> np.ndarray:
        """Length 2L + 1 array with the (zero) delay-0 tap in front."""
        return np.concatenate([[0.0], self.coeffs])


@dataclass(frozen=True, eq=False)
class GramSymbol:
    """Difference response c, Toeplitz entries g_0..g_{2L-1} of G = C^T C, and the symbol f."""
    c: np.ndarray
    g: np.ndarray
    baseline_label: str = BASELINE
    attacked_label: str = ""

    def __post_init__(self):
        for name in ("c", "g"):
            value = np.array(getattr(self, name), dtype=np.float64)
            value.setflags(write=False)
            object.__setattr__(self, name, value)

    @property
    def band(self) -> int:
        return len(self.c)

    @property
    def L(self) -> int:
        return len(self.c) // 2

    def delay_indexed(self) -> np.ndarray:
        return np.concatenate([[0.0], self.c])

    def is_null(self) -> bool:
        return not np.any(self.c)


@dataclass
class ResponseTable:
    """Row-wise view of a, c, g used by the coefficient dump."""
    index: T.List[int] = field(default_factory=list)
    a_baseline: T.List[float] = field(default_factory=list)
    a_attacked: T.List[float] = field(default_factory=list)
    c: T.List[float] = field(default_factory=list)
    g: T.List[float] = field(default_factory=list)
