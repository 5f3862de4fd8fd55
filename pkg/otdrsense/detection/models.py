import math
import typing as T
from dataclasses import dataclass, field

from ..base.errors import ValidationError

LOG_HALF = -math.log(2.0)
ROUND_OFF = 1e-12


@dataclass(frozen=True)
class LogProb:
    """Natural log of a probability; error probabilities at realistic energies underflow any float format."""
    value: float

    def __post_init__(self):
        value = float(self.value)
        if math.isnan(value) or value > ROUND_OFF:
            raise ValidationError(f"log-probability must be <= 0, got {value}")
        object.__setattr__(self, "value", min(value, 0.0))

    @classmethod
    def from_probability(cls, p: float) -> "LogProb":
        if not 0 <= p <= 1:
            raise ValidationError(f"probability must lie in [0, 1], got {p}")
        return cls(math.log(p) if p > 0 else -math.inf)

    @property
    def probability(self) -> float:
        return math.exp(self.value)


@dataclass(frozen=True)
class DetectionExponentReport:
    n: int
    n_effective: int
    overlap_log: LogProb
    povm_error_log: LogProb
    helstrom_error_log: LogProb
    discard_transient: bool

    @property
    def povm_exponent(self) -> float:
        return -self.povm_error_log.value / self.n_effective

    @property
    def helstrom_exponent(self) -> float:
        return -self.helstrom_error_log.value / self.n_effective

    @property
    def povm_overlap_exponent(self) -> float:
        return -(self.povm_error_log.value - LOG_HALF) / self.n_effective

    @property
    def helstrom_overlap_exponent(self) -> float:
        return -(self.helstrom_error_log.value - LOG_HALF) / self.n_effective


@dataclass(frozen=True)
class MCReport:
    estimate: float
    std_error: float
    samples: int
    seed: int
    workers: int
    analytic_value: T.Optional[float] = None

    @property
    def z_score(self) -> float:
        if self.analytic_value is None:
            return math.nan
        diff = self.estimate - self.analytic_value
        if self.std_error > 0:
            return diff / self.std_error
        return 0.0 if diff == 0 else math.copysign(math.inf, diff)


@dataclass(frozen=True)
class HomodyneReport:
    alpha: float
    threshold_alpha: float
    n_pulses: int
    mc: MCReport
    closed_form: LogProb

    @property
    def estimate_log(self) -> LogProb:
        return LogProb.from_probability(self.mc.estimate)

    @property
    def raw_exponent(self) -> float:
        return -self.estimate_log.value / self.n_pulses

    @property
    def corrected_exponent(self) -> float:
        """Raw exponent with the 1 / (alpha sqrt(2 pi n)) tail prefactor taken out."""
        if self.alpha <= 0:
            return self.raw_exponent
        prefactor = math.log(self.alpha * math.sqrt(2 * math.pi * self.n_pulses))
        return -(self.estimate_log.value + prefactor) / self.n_pulses


@dataclass
class CompositeHomodyneReport:
    threshold_alpha: float
    reports: T.List[HomodyneReport] = field(default_factory=list)

    @property
    def worst_index(self) -> int:
        return max(range(len(self.reports)), key=lambda i: self.reports[i].mc.estimate)

    @property
    def max_error(self) -> float:
        return self.reports[self.worst_index].mc.estimate


@dataclass(frozen=True)
class StreamProgress:
    stream: int
    streams: int
    samples: int
    mean: float


TProgressCallback = T.Callable[[StreamProgress], None]
