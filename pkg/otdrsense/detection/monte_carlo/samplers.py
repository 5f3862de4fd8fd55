import math
from abc import ABC, abstractmethod

import numpy as np
import torch

from ...base.errors import ValidationError


class Sampler(ABC):
    """Draws i.i.d. values whose mean is the estimated quantity. Must stay picklable for spawned workers."""

    @abstractmethod
    def draw(self, generator: torch.Generator, size: int, device: str) -> torch.Tensor:
        raise NotImplementedError()


class CodebookSampler(Sampler):
    """exp(-alpha^H G alpha) for alpha with i.i.d. circular complex Gaussian entries of variance E."""
    def __init__(self, gram: np.ndarray, energy: float):
        if energy < 0:
            raise ValidationError(f"energy must be non-negative, got {energy}")
        self.gram: np.ndarray = np.asarray(gram, dtype=np.float64)
        self.energy: float = float(energy)

    def draw(self, generator: torch.Generator, size: int, device: str) -> torch.Tensor:
        n = self.gram.shape[0]
        gram = torch.from_numpy(self.gram).to(device)
        scale = math.sqrt(self.energy / 2)
        x = torch.randn(size, n, generator=generator, dtype=torch.float64, device=device) * scale
        y = torch.randn(size, n, generator=generator, dtype=torch.float64, device=device) * scale
        q = ((x @ gram) * x).sum(dim=1) + ((y @ gram) * y).sum(dim=1)
        return torch.exp(-q)


class HomodyneSampler(Sampler):
    """
    Average error of the n-pulse sum-statistic test between N(0, 1/2) and N(sqrt(2) alpha, 1/2) pulses,
    with the threshold at the midpoint for threshold_alpha. With importance sampling the pulses are drawn
    around the per-pulse threshold and both error events are re-weighted by their likelihood ratios.
    """
    def __init__(self, alpha: float, n_pulses: int, threshold_alpha: float, importance_sampling: bool = True):
        if alpha < 0 or threshold_alpha < 0:
            raise ValidationError(f"homodyne amplitudes must be non-negative, got {alpha} and {threshold_alpha}")
        if n_pulses < 1:
            raise ValidationError(f"need at least one pulse, got {n_pulses}")
        self.alpha: float = float(alpha)
        self.n_pulses: int = int(n_pulses)
        self.threshold_alpha: float = float(threshold_alpha)
        self.importance_sampling: bool = importance_sampling

    def draw(self, generator: torch.Generator, size: int, device: str) -> torch.Tensor:
        n = self.n_pulses
        sigma = math.sqrt(0.5)
        threshold_mean = self.threshold_alpha / math.sqrt(2)
        attacked_mean = math.sqrt(2) * self.alpha
        threshold = n * threshold_mean
        if self.importance_sampling:
            pulses = torch.randn(size, n, generator=generator, dtype=torch.float64, device=device) * sigma
            s = (pulses + threshold_mean).sum(dim=1)
            false_alarm_log_weight = -2 * s * threshold_mean + n * threshold_mean ** 2
            miss_log_weight = 2 * s * (attacked_mean - threshold_mean) + n * (threshold_mean ** 2 - attacked_mean ** 2)
            # each draw lands in exactly one of the two error regions
            weight = torch.where(s > threshold, torch.exp(false_alarm_log_weight), torch.exp(miss_log_weight))
            return 0.5 * weight
        normal = torch.randn(size, n, generator=generator, dtype=torch.float64, device=device) * sigma
        attacked = torch.randn(size, n, generator=generator, dtype=torch.float64, device=device) * sigma
        false_alarm = normal.sum(dim=1) > threshold
        miss = (attacked + attacked_mean).sum(dim=1) <= threshold
        return 0.5 * (false_alarm.to(torch.float64) + miss.to(torch.float64))
