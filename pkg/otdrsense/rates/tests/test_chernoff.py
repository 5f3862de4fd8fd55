import math

import pytest
import scipy.stats

from ... import rates
from ...base import ValidationError


def test_chernoff_gaussian_closed_values():
    assert rates.chernoff_gaussian(1.0, 1.0, 0.3) == 0.0
    assert rates.chernoff_gaussian(0.0, math.sqrt(2), 0.5) == pytest.approx(0.5, rel=1e-15)
    assert rates.chernoff_gaussian(0.0, 2.0, 1.0) == pytest.approx(0.5)


@pytest.mark.parametrize("variance", [0.0, -1.0])
def test_chernoff_gaussian_rejects_bad_variance(variance):
    with pytest.raises(ValidationError):
        rates.chernoff_gaussian(0.0, 1.0, variance)


@pytest.mark.parametrize("mu1,variance", [
    pytest.param(2.0, 1.0, id="unit variance"),
    pytest.param(math.sqrt(2), 0.5, id="homodyne"),
])
def test_numerical_chernoff_matches_closed_form(mu1, variance):
    sigma = math.sqrt(variance)
    result = rates.chernoff_information(scipy.stats.norm(0.0, sigma).pdf, scipy.stats.norm(mu1, sigma).pdf)
    assert result.information == pytest.approx(rates.chernoff_gaussian(0.0, mu1, variance), rel=1e-6)
    assert result.weight == pytest.approx(0.5, abs=1e-3)


def test_numerical_chernoff_with_unequal_variances():
    narrow, wide = scipy.stats.norm(0.0, 1.0).pdf, scipy.stats.norm(0.0, 2.0).pdf
    result = rates.chernoff_information(narrow, wide)
    bhattacharyya = 0.5 * math.log((1.0 + 4.0) / (2 * 1.0 * 2.0))
    assert result.information >= bhattacharyya - 1e-9
    assert result.weight == pytest.approx(0.388, abs=0.01)
    swapped = rates.chernoff_information(wide, narrow)
    assert swapped.information == pytest.approx(result.information, rel=1e-6)
    assert swapped.weight == pytest.approx(1 - result.weight, abs=1e-3)
