import numpy as np
import pytest

from ... import fiber, spectral
from ...fiber.tests import tools


def test_non_negative_taps_peak_at_zero():
    c = np.array([0.0, 0.3, 0.0, 0.2, 0.0, 0.05])
    sym = fiber.gram_symbol(fiber.BackscatterResponse(np.zeros(6)), fiber.BackscatterResponse(c))
    sup = spectral.symbol_supremum(sym)
    assert sup.xi == 0.0
    assert sup.value == pytest.approx(np.sum(c) ** 2, rel=1e-12)


def test_mixed_sign_taps_against_brute_force_grid():
    sym = tools.worked_symbol()
    sup = spectral.symbol_supremum(sym)
    brute = fiber.eval_symbol(sym, np.linspace(0, 2 * np.pi, 10 ** 6, endpoint=False))
    assert sup.value >= brute.max() * (1 - 1e-9)
    assert sup.value == pytest.approx(brute.max(), rel=1e-9)
    c2, c4 = sym.c[1], sym.c[3]
    assert sup.value == pytest.approx((abs(c2) + abs(c4)) ** 2, rel=1e-9)
    assert sup.xi != 0.0


@pytest.mark.parametrize("seed", range(6))
def test_random_symbols_against_brute_force_grid(seed):
    spec, attack = tools.random_scenario(np.random.default_rng(100 + seed), max_L=12)
    sym = fiber.attack_symbol(spec, attack)
    xi = np.linspace(0, 2 * np.pi, 2 * 10 ** 5, endpoint=False)
    values = fiber.eval_symbol(sym, xi)
    sup = spectral.symbol_supremum(sym)
    inf = spectral.symbol_infimum(sym)
    assert sup.value >= values.max() * (1 - 1e-9)
    assert inf.value <= values.min() + 1e-9 * values.max()
    assert sup.value == pytest.approx(fiber.eval_symbol(sym, sup.xi))
