import typing as T

import numpy as np

from ..base import get_logger
from ..base.errors import ValidationError
from ..fiber import GramSymbol, symbol_on_grid
from .eigen import toeplitz_eigenvalues
from .models import Functional, SzegoResult
from .params import NumericsParams

log = get_logger(__name__)


def szego_functional(sym: GramSymbol,
                     functional: T.Union[str, Functional],
                     energy: float = 1.0,
                     nodes: T.Optional[int] = None,
                     numerics: NumericsParams = NumericsParams()) -> SzegoResult:
    """(1 / 2 pi) int_0^{2 pi} F(f(xi)) d xi by the uniform trapezoid rule on the periodic grid."""
    functional = Functional.parse(functional)
    nodes = numerics.quadrature_nodes if nodes is None else nodes
    if nodes < 64:
        raise ValidationError(f"quadrature needs at least 64 nodes, got {nodes}")
    if energy < 0:
        raise ValidationError(f"energy must be non-negative, got {energy}")
    values = functional.apply(symbol_on_grid(sym, nodes), energy)
    limit = float(np.mean(values))
    return SzegoResult(functional, energy, limit, nodes)


def szego_convergence(sym: GramSymbol,
                      functional: T.Union[str, Functional],
                      energy: float = 1.0,
                      n_list: T.Optional[T.Sequence[int]] = None,
                      numerics: NumericsParams = NumericsParams()) -> SzegoResult:
    result = szego_functional(sym, functional, energy, numerics=numerics)
    for n in (numerics.n_list if n_list is None else n_list):
        spectrum = toeplitz_eigenvalues(sym, n, numerics)
        value = float(np.mean(result.functional.apply(spectrum.eigenvalues, energy)))
        result.finite_n_values.append((n, value))
        log.info(f"{result.functional.value} at n={n}: {value} (limit {result.limit_value})")
    return result
