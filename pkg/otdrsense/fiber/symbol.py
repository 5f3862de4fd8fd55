import typing as T

import numpy as np

from ..base import get_logger
from ..base.errors import ValidationError
from .backscatter import backscatter_coefficients
from .models import FiberSpec, AttackSpec, BackscatterResponse, GramSymbol

log = get_logger(__name__)

Real = T.Union[float, np.ndarray]


def gram_symbol(baseline: BackscatterResponse, attacked: BackscatterResponse) -> GramSymbol:
    if baseline.L != attacked.L:
        raise ValidationError(f"responses have different block counts: {baseline.L} and {attacked.L}")
    c = attacked.coeffs - baseline.coeffs
    band = len(c)
    # g_k = sum_j c_j c_{j+k}, lags 0..2L-1
    g = np.correlate(c, c, mode="full")[band - 1:]
    log.debug(f"symbol for {attacked.state_label}: g_0={g[0]}")
    return GramSymbol(c, g, baseline.state_label, attacked.state_label)


def attack_symbol(spec: FiberSpec, attack: AttackSpec) -> GramSymbol:
    return gram_symbol(backscatter_coefficients(spec), backscatter_coefficients(spec, attack))


def eval_symbol(sym: GramSymbol, xi: Real) -> Real:
    """f(xi) = g_0 + 2 sum_k g_k cos(k xi); negative round-off is clamped to zero."""
    xi_array = np.asarray(xi, dtype=np.float64)
    k = np.arange(1, len(sym.g))
    values = sym.g[0] + 2.0 * np.cos(np.multiply.outer(xi_array, k)) @ sym.g[1:]
    values = np.maximum(values, 0.0)
    if values.ndim == 0:
        return float(values)
    return values


def modulus_squared(sym: GramSymbol, xi: Real) -> Real:
    xi_array = np.asarray(xi, dtype=np.float64)
    k = np.arange(1, sym.band + 1)
    values = np.abs(np.exp(1j * np.multiply.outer(xi_array, k)) @ sym.c) ** 2
    if values.ndim == 0:
        return float(values)
    return values


def symbol_on_grid(sym: GramSymbol, nodes: int) -> np.ndarray:
    """f at xi_j = 2 pi j / nodes, exact for any band because taps are folded modulo the grid."""
    if nodes < 1:
        raise ValidationError(f"the symbol grid needs at least one node, got {nodes}")
    taps = sym.delay_indexed()
    if len(taps) > nodes:
        folded = np.zeros(nodes, dtype=np.float64)
        np.add.at(folded, np.arange(len(taps)) % nodes, taps)
        taps = folded
    return np.abs(np.fft.fft(taps, n=nodes)) ** 2


def symbol_at_zero(sym: GramSymbol) -> float:
    """(sum_k c_k)^2, the detection exponent closed form for non-negative taps."""
    return float(np.sum(sym.c) ** 2)
