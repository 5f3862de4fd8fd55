import typing as T

import numpy as np

from ..base import get_logger
from ..base.errors import ValidationError
from .models import FiberSpec, AttackSpec, BackscatterResponse, ResponseTable, BASELINE

log = get_logger(__name__)


def apply_attack(spec: FiberSpec, attack: T.Optional[AttackSpec]) -> T.Tuple[np.ndarray, np.ndarray]:
    tau, theta = spec.tau_array, spec.theta_array
    if attack is None:
        return tau, theta
    attack.validate_against(spec)
    tau[attack.position - 1] = attack.tau
    theta[attack.position - 1] = attack.theta
    return tau, theta


def backscatter_coefficients(spec: FiberSpec, attack: T.Optional[AttackSpec] = None) -> BackscatterResponse:
    """
    Impulse response of the return channel. Block j picks up sqrt(theta'_j tau'_j) of the pulse after
    crossing blocks 1..j-1, so the delay-2j coefficient is sqrt(theta'_j tau'_j prod_{k<j} theta_k tau_k)
    and every odd delay vanishes.
    """
    tau, theta = apply_attack(spec, attack)
    prefix = np.concatenate([[1.0], np.cumprod(theta * tau)[:-1]])
    coeffs = np.zeros(spec.band, dtype=np.float64)
    coeffs[1::2] = np.sqrt((1.0 - theta) * (1.0 - tau) * prefix)
    label = BASELINE if attack is None else attack.label()
    log.debug(f"computed {label} response, max coefficient {coeffs.max()}")
    return BackscatterResponse(coeffs, label)


def forward_loss(spec: FiberSpec) -> float:
    return float(np.prod(spec.tau_array))


def null_attack(spec: FiberSpec, position: int) -> AttackSpec:
    if not 1 <= position <= spec.L:
        raise ValidationError(f"attack position {position} is outside [1, {spec.L}]")
    return AttackSpec(position, spec.tau[position - 1], spec.theta[position - 1])


def expand_attack_grid(spec: FiberSpec,
                       positions: T.Sequence[int],
                       taus: T.Sequence[float],
                       thetas: T.Sequence[float]) -> T.List[AttackSpec]:
    attacks = []
    for p in positions:
        for a in taus:
            for b in thetas:
                attack = AttackSpec(p, a, b)
                attack.validate_against(spec)
                attacks.append(attack)
    return attacks


def response_table(baseline: BackscatterResponse, attacked: BackscatterResponse, g: np.ndarray) -> ResponseTable:
    table = ResponseTable()
    for k in range(1, len(baseline.coeffs) + 1):
        table.index.append(k)
        table.a_baseline.append(baseline.a(k))
        table.a_attacked.append(attacked.a(k))
        table.c.append(attacked.a(k) - baseline.a(k))
        table.g.append(float(g[k - 1]))
    return table
