import numpy as np

from ... import fiber

WORKED_SPEC = fiber.FiberSpec(2, (0.9, 0.9), (0.5, 0.5), 1.0)
WORKED_ATTACK = fiber.AttackSpec(1, 0.5, 0.5)


def worked_symbol() -> fiber.GramSymbol:
    return fiber.attack_symbol(WORKED_SPEC, WORKED_ATTACK)


def single_tap_symbol(L: int = 2) -> fiber.GramSymbol:
    c = np.zeros(2 * L)
    c[1] = 1.0
    baseline = fiber.BackscatterResponse(np.zeros(2 * L))
    return fiber.gram_symbol(baseline, fiber.BackscatterResponse(c, "single tap"))


def random_scenario(rng: np.random.Generator, max_L: int = 6):
    L = int(rng.integers(1, max_L + 1))
    tau = rng.uniform(0.3, 1.0, L)
    theta = rng.uniform(0.0, 1.0, L)
    spec = fiber.FiberSpec(L, tuple(tau), tuple(theta), float(rng.uniform(0.1, 10.0)))
    p = int(rng.integers(1, L + 1))
    attack = fiber.AttackSpec(p, float(rng.uniform(0.0, tau[p - 1])), float(rng.uniform(0.0, 1.0)))
    return spec, attack
