import math

import numpy as np
import pytest

from ... import detection, fiber
from ...base import ValidationError
from ...fiber.tests import tools as fiber_tools
from . import tools


def test_determinant_closed_values():
    single = fiber_tools.single_tap_symbol()
    assert detection.expected_error_determinant_log(single, 4, 0.0).value == 0.0
    assert detection.expected_error_determinant_log(single, 1, 1.0).value == pytest.approx(-math.log(2.0))
    spec = fiber_tools.WORKED_SPEC
    null = fiber.attack_symbol(spec, fiber.null_attack(spec, 1))
    assert detection.expected_error_determinant_log(null, 10, 5.0).value == 0.0


@pytest.mark.parametrize("seed", range(4))
def test_determinant_matches_slogdet(seed):
    spec, attack = fiber_tools.random_scenario(np.random.default_rng(seed))
    sym = fiber.attack_symbol(spec, attack)
    gram = fiber.toeplitz_gram(sym, 24)
    _, logdet = np.linalg.slogdet(np.eye(24) + spec.energy * gram)
    value = detection.expected_error_determinant_log(sym, 24, spec.energy).value
    assert value == pytest.approx(-logdet, rel=1e-9, abs=1e-12)


def test_determinant_rejects_negative_energy():
    with pytest.raises(ValidationError):
        detection.expected_error_determinant_log(fiber_tools.single_tap_symbol(), 4, -1.0)


@pytest.mark.parametrize("alpha,n,expected", [
    pytest.param(0.0, 5, 0.5, id="identical hypotheses"),
    pytest.param(1.0, 1, 0.15865525393145707, id="single pulse"),
    pytest.param(0.5, 4, 0.15865525393145707, id="four pulses"),
])
def test_homodyne_closed_form(alpha, n, expected):
    assert detection.homodyne_error_closed_form(alpha, n).probability == pytest.approx(expected, rel=1e-12)


def test_homodyne_closed_form_for_mismatched_threshold():
    # threshold tuned for alpha 1, pulses carry alpha 2: misses are far rarer than false alarms
    value = detection.homodyne_error_closed_form(2.0, 1, threshold_alpha=1.0).probability
    assert value == pytest.approx(0.5 * (0.15865525393145707 + 0.0013498980316301035), rel=1e-12)


def test_steady_state_amplitude():
    sym = tools.symbol_from_taps(0.0, 0.3, 0.0, -0.1)
    assert detection.steady_state_amplitude(sym, 4.0) == pytest.approx(0.4)
