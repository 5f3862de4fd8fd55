import math
import typing as T

import numpy as np

from ..base import get_logger
from ..base.errors import ValidationError
from ..fiber import GramSymbol, quadratic_form
from .models import LogProb, DetectionExponentReport, LOG_HALF

log = get_logger(__name__)

ENERGY_TOLERANCE = 1e-9
ROUNDING_FLOOR = 1e-12


def coherent_overlap_log(alpha: np.ndarray, beta: np.ndarray) -> LogProb:
    """ln |<alpha|beta>|^2 = -sum |alpha_i - beta_i|^2 for n-mode coherent states."""
    alpha, beta = np.asarray(alpha), np.asarray(beta)
    if alpha.shape != beta.shape:
        raise ValidationError(f"coherent states have different lengths: {alpha.shape} and {beta.shape}")
    return LogProb(-float(np.sum(np.abs(alpha - beta) ** 2)))


def helstrom_error(overlap_sq_log: LogProb) -> LogProb:
    """
    ln of 1/2 (1 - sqrt(1 - x)) with x the squared overlap, rewritten as 1/2 x / (1 + sqrt(1 - x))
    so it stays exact when x underflows.
    """
    ell = overlap_sq_log.value
    if ell == -math.inf:
        return LogProb(-math.inf)
    return LogProb(LOG_HALF + ell - math.log1p(math.sqrt(-math.expm1(ell))))


helstrom_error_log = helstrom_error


def _check_energy(alpha: np.ndarray, energy: T.Optional[float]) -> None:
    if energy is None:
        return
    budget = len(alpha) * energy
    used = float(np.sum(np.abs(alpha) ** 2))
    if used > budget * (1 + ENERGY_TOLERANCE) + ROUNDING_FLOOR:
        raise ValidationError(f"input energy {used} exceeds the budget n E = {budget}")


def povm_error_log(alpha: np.ndarray, gram: T.Union[GramSymbol, np.ndarray],
                   energy: T.Optional[float] = None) -> LogProb:
    """Error of the displacement receiver, ln(1/2) - <alpha, G_n alpha>."""
    alpha = np.asarray(alpha)
    _check_energy(alpha, energy)
    if isinstance(gram, GramSymbol):
        q = quadratic_form(gram, alpha)
    else:
        gram = np.asarray(gram)
        if gram.shape != (len(alpha), len(alpha)):
            raise ValidationError(f"G has shape {gram.shape}, input has length {len(alpha)}")
        q = float(np.real(np.vdot(alpha, gram @ alpha)))
    return LogProb(LOG_HALF - max(q, 0.0))


def detection_exponents(sym: GramSymbol, alpha: np.ndarray, discard_transient: bool = True,
                        energy: T.Optional[float] = None) -> DetectionExponentReport:
    """
    POVM and Helstrom errors for one input block. With discard_transient only the returns at
    times 2L+1..n enter the overlap, so the exponent is normalised by n - 2L.
    """
    alpha = np.asarray(alpha)
    _check_energy(alpha, energy)
    n = len(alpha)
    if discard_transient:
        if n <= sym.band:
            raise ValidationError(f"discarding the transient needs n > 2L = {sym.band}, got {n}")
        returns = np.convolve(alpha, sym.delay_indexed())[sym.band:n]
        q = float(np.sum(np.abs(returns) ** 2))
        n_effective = n - sym.band
    else:
        q = quadratic_form(sym, alpha)
        n_effective = n
    overlap = LogProb(-q)
    report = DetectionExponentReport(n, n_effective, overlap, LogProb(LOG_HALF - q), helstrom_error(overlap),
                                     discard_transient)
    log.debug(f"n={n}: povm exponent {report.povm_exponent}, helstrom exponent {report.helstrom_exponent}")
    return report
