import math
import typing as T

from ..base.errors import ValidationError
from ..fiber import GramSymbol, toeplitz_gram
from ..spectral import NumericsParams
from .gaussian import expected_error_determinant_log, homodyne_error_closed_form
from .models import MCReport, HomodyneReport, CompositeHomodyneReport
from .monte_carlo import MonteCarloParams, MonteCarloEstimator, CodebookSampler, HomodyneSampler


def expected_error_mc(sym: GramSymbol, n: int, energy: float,
                      params: MonteCarloParams = MonteCarloParams(),
                      numerics: NumericsParams = NumericsParams(),
                      estimator: T.Optional[MonteCarloEstimator] = None) -> MCReport:
    """Monte Carlo average of exp(-alpha^H G_n alpha) over the Gaussian codebook, next to its determinant value."""
    analytic = math.exp(expected_error_determinant_log(sym, n, energy, numerics).value)
    sampler = CodebookSampler(toeplitz_gram(sym, n, numerics.dense_n_limit), energy)
    return (estimator or MonteCarloEstimator(params)).estimate(sampler, analytic)


def homodyne_mc(alpha: float, n_pulses: int,
                params: MonteCarloParams = MonteCarloParams(),
                threshold_alpha: T.Optional[float] = None,
                importance_sampling: bool = True,
                estimator: T.Optional[MonteCarloEstimator] = None) -> HomodyneReport:
    threshold_alpha = alpha if threshold_alpha is None else threshold_alpha
    sampler = HomodyneSampler(alpha, n_pulses, threshold_alpha, importance_sampling)
    closed_form = homodyne_error_closed_form(alpha, n_pulses, threshold_alpha)
    mc = (estimator or MonteCarloEstimator(params)).estimate(sampler, closed_form.probability)
    return HomodyneReport(alpha, threshold_alpha, n_pulses, mc, closed_form)


def homodyne_composite_mc(alphas: T.Sequence[float], n_pulses: int,
                          params: MonteCarloParams = MonteCarloParams(),
                          importance_sampling: bool = True,
                          estimator: T.Optional[MonteCarloEstimator] = None) -> CompositeHomodyneReport:
    """One test tuned to the weakest attack, evaluated against every attack; the worst pair bounds the error."""
    if len(alphas) == 0:
        raise ValidationError("composite homodyne test needs at least one attack amplitude")
    estimator = estimator or MonteCarloEstimator(params)
    result = CompositeHomodyneReport(min(alphas))
    for alpha in alphas:
        result.reports.append(homodyne_mc(alpha, n_pulses, params, result.threshold_alpha, importance_sampling,
                                          estimator))
    return result
