import math
import typing as T

import numpy as np
import scipy.linalg
import scipy.special

from ..base import get_logger
from ..base.errors import NumericalCheckError, ValidationError
from ..fiber import GramSymbol, toeplitz_gram
from ..spectral import NumericsParams, toeplitz_eigenvalues
from .models import LogProb, LOG_HALF

log = get_logger(__name__)

DETERMINANT_TOLERANCE = 1e-8


def log_det_identity_plus(sym: GramSymbol, n: int, energy: float,
                          numerics: NumericsParams = NumericsParams()) -> float:
    """
    ln det(E G_n + I), once from the eigenvalues and once from a Cholesky factor;
    the two must agree or NumericalCheckError is raised.
    """
    if energy < 0:
        raise ValidationError(f"energy must be non-negative, got {energy}")
    spectrum = toeplitz_eigenvalues(sym, n, numerics)
    from_eigenvalues = float(np.sum(np.log1p(energy * spectrum.eigenvalues)))
    factor = scipy.linalg.cholesky(energy * toeplitz_gram(sym, n, numerics.dense_n_limit) + np.eye(n), lower=True)
    from_cholesky = 2.0 * float(np.sum(np.log(np.diag(factor))))
    tolerance = max(DETERMINANT_TOLERANCE * abs(from_eigenvalues), 64 * n * np.finfo(np.float64).eps)
    if abs(from_eigenvalues - from_cholesky) > tolerance:
        raise NumericalCheckError(f"ln det(E G_{n} + I) disagrees: eigenvalues {from_eigenvalues}, "
                                  f"cholesky {from_cholesky}")
    log.debug(f"ln det(E G_{n} + I) = {from_eigenvalues} (cholesky {from_cholesky})")
    return from_eigenvalues


def expected_error_determinant_log(sym: GramSymbol, n: int, energy: float,
                                   numerics: NumericsParams = NumericsParams()) -> LogProb:
    """Codebook average of exp(-alpha^H G_n alpha), i.e. -sum ln(E lambda_i + 1); the 1/2 prefactor is not included."""
    return LogProb(-log_det_identity_plus(sym, n, energy, numerics))


def homodyne_error_closed_form(alpha: float, n: int, threshold_alpha: T.Optional[float] = None) -> LogProb:
    """
    Average error of the sum-statistic threshold test between N(0, 1/2) and N(sqrt(2) alpha, 1/2) pulses.
    The threshold sits at the midpoint for threshold_alpha (defaults to alpha), giving Phi(-alpha sqrt(n)).
    """
    if alpha < 0:
        raise ValidationError(f"homodyne amplitude must be non-negative, got {alpha}")
    if n < 1:
        raise ValidationError(f"need at least one pulse, got {n}")
    threshold_alpha = alpha if threshold_alpha is None else threshold_alpha
    root_n = math.sqrt(n)
    false_alarm = scipy.special.log_ndtr(-threshold_alpha * root_n)
    miss = scipy.special.log_ndtr(-(2 * alpha - threshold_alpha) * root_n)
    return LogProb(LOG_HALF + float(np.logaddexp(false_alarm, miss)))


def steady_state_amplitude(sym: GramSymbol, energy: float) -> float:
    """Homodyne amplitude alpha_s = sqrt(E) |sum_k c_k| of one return once the first 2L uses are discarded."""
    return math.sqrt(energy) * abs(float(np.sum(sym.c)))
