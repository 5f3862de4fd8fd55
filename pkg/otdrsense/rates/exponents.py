import math
import typing as T

from ..base import get_logger
from ..base.errors import ValidationError
from ..fiber import FiberSpec, AttackSpec, attack_symbol, symbol_at_zero
from ..spectral import NumericsParams, Functional, symbol_supremum, szego_functional
from .chernoff import chernoff_gaussian
from .capacity import capacity_quantum
from .models import AttackExponents, RatePoint, Strategy, Provenance

log = get_logger(__name__)

# variance of a homodyne outcome on a coherent state
HOMODYNE_VARIANCE = 0.5


def attack_exponents(spec: FiberSpec, attacks: T.Sequence[AttackSpec],
                     numerics: NumericsParams = NumericsParams()) -> T.List[AttackExponents]:
    if len(attacks) == 0:
        raise ValidationError("at least one attack is needed")
    result = []
    for index, attack in enumerate(attacks):
        sym = attack_symbol(spec, attack)
        sup = symbol_supremum(sym, numerics)
        f0 = symbol_at_zero(sym)
        energy = spec.energy
        rate_optimal = szego_functional(sym, Functional.LOG1P_SCALED, energy, numerics=numerics).limit_value
        exponents = AttackExponents(
            index=index,
            attack=attack,
            sup_xi=sup.xi,
            sup_f=sup.value,
            f0=f0,
            d_maxD_quantum=energy * sup.value,
            d_maxD_f0=energy * f0,
            d_maxD_classical=chernoff_gaussian(0.0, math.sqrt(2 * energy * sup.value), HOMODYNE_VARIANCE),
            d_maxD_classical_f0=chernoff_gaussian(0.0, math.sqrt(2 * energy * f0), HOMODYNE_VARIANCE),
            d_maxR_quantum=max(rate_optimal, 0.0),
        )
        log.debug(f"{attack.label()}: {exponents}")
        result.append(exponents)
    return result


def worst(exponents: T.Sequence[AttackExponents], quantity: str) -> AttackExponents:
    """Attack minimising the quantity; ties resolve to the first listed attack."""
    return min(exponents, key=lambda e: (getattr(e, quantity), e.index))


def d_maxD_quantum(spec: FiberSpec, attacks: T.Sequence[AttackSpec],
                   numerics: NumericsParams = NumericsParams()) -> T.Tuple[RatePoint, T.List[AttackExponents]]:
    exponents = attack_exponents(spec, attacks, numerics)
    w = worst(exponents, "d_maxD_quantum")
    return RatePoint(0.0, w.d_maxD_quantum, Strategy.QUANTUM, Provenance.DETECTION_OPTIMAL,
                     worst_attack_index=w.index), exponents


def d_maxD_classical(spec: FiberSpec, attacks: T.Sequence[AttackSpec],
                     numerics: NumericsParams = NumericsParams()) -> RatePoint:
    w = worst(attack_exponents(spec, attacks, numerics), "d_maxD_classical")
    return RatePoint(0.0, w.d_maxD_classical, Strategy.CLASSICAL, Provenance.DETECTION_OPTIMAL,
                     worst_attack_index=w.index)


def d_maxR_quantum(spec: FiberSpec, attacks: T.Sequence[AttackSpec],
                   numerics: NumericsParams = NumericsParams()) -> RatePoint:
    w = worst(attack_exponents(spec, attacks, numerics), "d_maxR_quantum")
    return RatePoint(capacity_quantum(spec), w.d_maxR_quantum, Strategy.QUANTUM, Provenance.RATE_OPTIMAL,
                     worst_attack_index=w.index)
