import math

import pytest

from ... import fiber, rates
from ...base import ValidationError


@pytest.mark.parametrize("x,expected", [
    pytest.param(0.0, 0.0, id="zero"),
    pytest.param(1.0, 2.0, id="one"),
    pytest.param(3.0, 4 * 2 - 3 * math.log2(3), id="three"),
    pytest.param(3.660323e6, 23.246234769985042, id="large"),
])
def test_gordon(x, expected):
    assert rates.gordon(x) == pytest.approx(expected, rel=1e-12)


def test_gordon_large_value_and_monotonicity():
    assert rates.gordon(3.660323e6) == pytest.approx(23.246, abs=1e-3)
    values = [rates.gordon(x) for x in (0.0, 1e-6, 0.1, 1.0, 10.0, 1e4)]
    assert values == sorted(values)


def test_gordon_rejects_negative():
    with pytest.raises(ValidationError):
        rates.gordon(-1e-3)


def test_capacities():
    assert rates.capacity_quantum(fiber.FiberSpec.uniform(3, 0.9, 0.5, 0.0)) == 0.0
    assert rates.capacity_classical(fiber.FiberSpec.uniform(3, 0.9, 0.5, 0.0)) == 0.0
    lossless = fiber.FiberSpec.uniform(1, 1.0, 0.5, 1.0)
    assert rates.capacity_quantum(lossless) == pytest.approx(2.0)
    assert rates.capacity_classical(lossless) == pytest.approx(0.5 * math.log2(5))
    reference = fiber.FiberSpec.uniform(100, 0.99, 0.5, 1e7)
    assert rates.capacity_quantum(reference) == pytest.approx(rates.gordon(0.99 ** 100 * 1e7), rel=1e-12)


@pytest.mark.parametrize("energy", [1e-3, 0.5, 1.0, 40.0, 1e7])
def test_classical_never_exceeds_quantum(energy):
    spec = fiber.FiberSpec.uniform(4, 0.95, 0.5, energy)
    assert rates.capacity_classical(spec) < rates.capacity_quantum(spec)
