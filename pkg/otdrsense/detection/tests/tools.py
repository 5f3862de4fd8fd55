import numpy as np

from ... import fiber

REFERENCE_SPEC = fiber.FiberSpec.uniform(100, 0.99, 0.5, 1e7)
REFERENCE_ATTACK = fiber.AttackSpec(50, 0.4, 0.5)


def reference_symbol() -> fiber.GramSymbol:
    return fiber.attack_symbol(REFERENCE_SPEC, REFERENCE_ATTACK)


def symbol_from_taps(*taps: float) -> fiber.GramSymbol:
    c = np.array(taps, dtype=np.float64)
    return fiber.gram_symbol(fiber.BackscatterResponse(np.zeros(len(c))), fiber.BackscatterResponse(c, "taps"))
