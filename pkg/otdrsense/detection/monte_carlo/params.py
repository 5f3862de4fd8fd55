from dataclasses import dataclass

from ...base.errors import ValidationError

MIN_SAMPLES = 1000
MAX_SEED = 2 ** 64 - 1


@dataclass(frozen=True)
class MonteCarloParams:
    samples: int = 1_000_000
    seed: int = 0
    workers: int = 1
    chunk_size: int = 65536
    use_gpu: bool = False

    def __post_init__(self):
        if self.samples < MIN_SAMPLES:
            raise ValidationError(f"samples must be at least {MIN_SAMPLES}, got {self.samples}")
        if not 0 <= self.seed <= MAX_SEED:
            raise ValidationError(f"seed must be an unsigned 64 bit integer, got {self.seed}")
        if self.workers < 1:
            raise ValidationError(f"workers must be at least 1, got {self.workers}")
        if self.chunk_size < 1:
            raise ValidationError(f"chunk_size must be at least 1, got {self.chunk_size}")
