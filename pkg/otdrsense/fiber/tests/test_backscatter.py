import numpy as np
import pytest

from . import tools
from ... import fiber
from ...base import ValidationError


def test_worked_example_baseline():
    response = fiber.backscatter_coefficients(tools.WORKED_SPEC)
    np.testing.assert_allclose(response.coeffs, [0.0, 0.2236068, 0.0, 0.15], atol=1e-7)
    assert response.L == 2


def test_worked_example_attacked():
    response = fiber.backscatter_coefficients(tools.WORKED_SPEC, tools.WORKED_ATTACK)
    np.testing.assert_allclose(response.coeffs, [0.0, 0.5, 0.0, 0.1118034], atol=1e-7)


def test_lossless_fiber_has_no_pickup():
    spec = fiber.FiberSpec.uniform(7, 1.0, 0.3, 2.0)
    assert not np.any(fiber.backscatter_coefficients(spec).coeffs)


@pytest.mark.parametrize("seed", range(5))
def test_null_attack_returns_baseline_exactly(seed):
    rng = np.random.default_rng(seed)
    spec, _ = tools.random_scenario(rng)
    baseline = fiber.backscatter_coefficients(spec)
    for p in range(1, spec.L + 1):
        attacked = fiber.backscatter_coefficients(spec, fiber.null_attack(spec, p))
        assert np.array_equal(attacked.coeffs, baseline.coeffs)
        assert fiber.gram_symbol(baseline, attacked).is_null()


@pytest.mark.parametrize("seed", range(5))
def test_odd_delays_vanish(seed):
    spec, attack = tools.random_scenario(np.random.default_rng(seed))
    sym = fiber.attack_symbol(spec, attack)
    assert not np.any(fiber.backscatter_coefficients(spec, attack).coeffs[0::2])
    assert not np.any(sym.c[0::2])
    assert np.all((0 <= sym.c + fiber.backscatter_coefficients(spec).coeffs))


def test_lower_tau_increases_pickup_at_attacked_block():
    spec = fiber.FiberSpec.uniform(5, 0.95, 0.5, 1.0)
    pickups = [fiber.backscatter_coefficients(spec, fiber.AttackSpec(3, a, 0.5)).a(6) for a in (0.9, 0.6, 0.3, 0.0)]
    assert all(later > earlier for earlier, later in zip(pickups, pickups[1:]))


def test_attack_validation():
    with pytest.raises(ValidationError):
        fiber.backscatter_coefficients(tools.WORKED_SPEC, fiber.AttackSpec(3, 0.5, 0.5))
    with pytest.raises(ValidationError):
        fiber.backscatter_coefficients(tools.WORKED_SPEC, fiber.AttackSpec(0, 0.5, 0.5))
    with pytest.raises(ValidationError):
        fiber.backscatter_coefficients(tools.WORKED_SPEC, fiber.AttackSpec(1, 0.95, 0.5))


def test_fiber_spec_validation():
    with pytest.raises(ValidationError):
        fiber.FiberSpec(2, (0.9,), (0.5, 0.5), 1.0)
    with pytest.raises(ValidationError):
        fiber.FiberSpec(1, (0.0,), (0.5,), 1.0)
    with pytest.raises(ValidationError):
        fiber.FiberSpec(1, (0.5,), (1.5,), 1.0)
    with pytest.raises(ValidationError):
        fiber.FiberSpec(1, (0.5,), (0.5,), -1.0)


@pytest.mark.parametrize("spec, expected", [
    pytest.param(fiber.FiberSpec.uniform(3, 1.0, 0.5, 1.0), 1.0, id="lossless"),
    pytest.param(fiber.FiberSpec.uniform(100, 0.99, 0.5, 1.0), 0.3660323, id="reference"),
    pytest.param(tools.WORKED_SPEC, 0.81, id="worked"),
])
def test_forward_loss(spec, expected):
    assert fiber.forward_loss(spec) == pytest.approx(expected, rel=1e-6)


def test_attack_grid_expansion():
    spec = fiber.FiberSpec.uniform(4, 0.9, 0.5, 1.0)
    attacks = fiber.expand_attack_grid(spec, [1, 3], [0.1, 0.5], [0.5])
    assert [(a.position, a.tau) for a in attacks] == [(1, 0.1), (1, 0.5), (3, 0.1), (3, 0.5)]
    with pytest.raises(ValidationError):
        fiber.expand_attack_grid(spec, [1], [0.95], [0.5])
