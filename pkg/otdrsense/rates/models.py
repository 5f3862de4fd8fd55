import enum
import math
import typing as T
from dataclasses import dataclass, field

from ..base.errors import ValidationError
from ..fiber import FiberSpec, AttackSpec


class Strategy(enum.Enum):
    QUANTUM = "quantum"
    CLASSICAL = "classical"


class Provenance(enum.Enum):
    DETECTION_OPTIMAL = "detection_optimal"
    RATE_OPTIMAL = "rate_optimal"
    TIME_SHARE = "time_share"
    F0_FORMULA = "f0_formula"


@dataclass(frozen=True)
class RatePoint:
    """R in bits per channel use, D in nats per channel use."""
    R: float
    D: float
    strategy: Strategy
    provenance: Provenance
    lam: T.Optional[float] = None
    worst_attack_index: T.Optional[int] = None

    def __post_init__(self):
        if not (math.isfinite(self.R) and self.R >= 0):
            raise ValidationError(f"rate must be finite and non-negative, got {self.R}")
        if not (math.isfinite(self.D) and self.D >= 0):
            raise ValidationError(f"detection exponent must be finite and non-negative, got {self.D}")


@dataclass(frozen=True)
class AttackExponents:
    index: int
    attack: AttackSpec
    sup_xi: float
    sup_f: float
    f0: float
    d_maxD_quantum: float
    d_maxD_f0: float
    d_maxD_classical: float
    d_maxD_classical_f0: float
    d_maxR_quantum: float


QUANTITIES = ("d_maxD_quantum", "d_maxD_f0", "d_maxD_classical", "d_maxD_classical_f0", "d_maxR_quantum")


@dataclass
class RegionReport:
    fiber: FiberSpec
    attacks: T.List[AttackSpec]
    worst_attack_per_quantity: T.Dict[str, int] = field(default_factory=dict)
    points: T.List[RatePoint] = field(default_factory=list)
    boundary: T.List[RatePoint] = field(default_factory=list)
    f0_points: T.List[RatePoint] = field(default_factory=list)
    exponents: T.List[AttackExponents] = field(default_factory=list)
    metadata: T.Dict[str, str] = field(default_factory=dict)
    f0_disagreement: bool = False

    def corner(self, strategy: Strategy, provenance: Provenance) -> RatePoint:
        for point in self.points:
            if point.strategy is strategy and point.provenance is provenance:
                return point
        raise KeyError(f"no {strategy.value} {provenance.value} point")

    def boundary_of(self, strategy: Strategy) -> T.List[RatePoint]:
        return [p for p in self.boundary if p.strategy is strategy]
