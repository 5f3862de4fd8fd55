import math

import pytest

from ... import detection, fiber
from ...base import ValidationError
from ...fiber.tests import tools as fiber_tools


def test_null_attack_codebook_average_is_exactly_one():
    spec = fiber_tools.WORKED_SPEC
    null = fiber.attack_symbol(spec, fiber.null_attack(spec, 2))
    report = detection.expected_error_mc(null, 6, 1.0, detection.MonteCarloParams(samples=5000, seed=3))
    assert report.estimate == 1.0
    assert report.std_error == 0.0
    assert report.z_score == 0.0


def test_single_mode_codebook_average_is_half():
    report = detection.expected_error_mc(fiber_tools.single_tap_symbol(), 1, 1.0,
                                         detection.MonteCarloParams(samples=200_000, seed=11))
    assert report.analytic_value == pytest.approx(0.5)
    assert abs(report.z_score) <= 4


def test_worked_example_codebook_average_matches_determinant():
    sym = fiber_tools.worked_symbol()
    report = detection.expected_error_mc(sym, 8, 0.1, detection.MonteCarloParams(samples=200_000, seed=5))
    assert report.analytic_value == pytest.approx(math.exp(detection.expected_error_determinant_log(sym, 8, 0.1).value))
    assert abs(report.z_score) <= 4


def test_same_seed_gives_identical_reports():
    params = detection.MonteCarloParams(samples=4000, seed=42, chunk_size=1000)
    first = detection.expected_error_mc(fiber_tools.worked_symbol(), 5, 0.5, params)
    second = detection.expected_error_mc(fiber_tools.worked_symbol(), 5, 0.5, params)
    assert first == second
    other = detection.expected_error_mc(fiber_tools.worked_symbol(), 5, 0.5,
                                        detection.MonteCarloParams(samples=4000, seed=43, chunk_size=1000))
    assert other.estimate != first.estimate


def test_homodyne_identical_hypotheses_are_a_coin_flip():
    report = detection.homodyne_mc(0.0, 10, detection.MonteCarloParams(samples=2000, seed=1))
    assert report.mc.estimate == 0.5
    assert report.mc.std_error == 0.0


def test_homodyne_plain_simulation_single_pulse():
    report = detection.homodyne_mc(1.0, 1, detection.MonteCarloParams(samples=100_000, seed=9),
                                   importance_sampling=False)
    assert report.closed_form.probability == pytest.approx(0.15865525393145707)
    assert abs(report.mc.z_score) <= 4


def test_homodyne_exponent_approaches_chernoff_value():
    report = detection.homodyne_mc(1.0, 20, detection.MonteCarloParams(samples=200_000, seed=7))
    assert abs(report.mc.z_score) <= 4
    assert report.corrected_exponent == pytest.approx(0.5, rel=0.1)
    assert report.raw_exponent > report.corrected_exponent


def test_composite_test_is_tuned_to_the_weakest_attack():
    result = detection.homodyne_composite_mc([1.0, 2.0], 5, detection.MonteCarloParams(samples=50_000, seed=2))
    assert result.threshold_alpha == 1.0
    assert [r.alpha for r in result.reports] == [1.0, 2.0]
    assert result.worst_index == 0
    assert result.max_error == result.reports[0].mc.estimate


def test_composite_needs_attacks():
    with pytest.raises(ValidationError):
        detection.homodyne_composite_mc([], 5)


def test_homodyne_exponents_from_estimate():
    mc = detection.MCReport(math.exp(-10.0), 0.0, 100, 0, 1)
    report = detection.HomodyneReport(1.0, 1.0, 20, mc, detection.LogProb(-10.0))
    assert report.estimate_log.value == pytest.approx(-10.0, rel=1e-12)
    assert report.raw_exponent == pytest.approx(0.5, rel=1e-12)
    assert report.corrected_exponent == pytest.approx((10.0 - math.log(math.sqrt(40 * math.pi))) / 20, rel=1e-12)
    empty = detection.HomodyneReport(1.0, 1.0, 20, detection.MCReport(0.0, 0.0, 100, 0, 1), detection.LogProb(-10.0))
    assert empty.raw_exponent == math.inf
    assert empty.corrected_exponent == math.inf
    with pytest.raises(ValidationError):
        detection.HomodyneReport(1.0, 1.0, 20, detection.MCReport(1.5, 0.0, 100, 0, 1),
                                  detection.LogProb(-10.0)).raw_exponent
