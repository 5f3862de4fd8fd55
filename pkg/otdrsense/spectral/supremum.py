import numpy as np
import scipy.optimize

from ..base import get_logger
from ..fiber import GramSymbol, eval_symbol, symbol_on_grid
from .models import Extremum
from .params import NumericsParams

log = get_logger(__name__)

REFINED_CANDIDATES = 8
TIE_TOLERANCE = 1e-12


def _locate(sym: GramSymbol, sign: float, numerics: NumericsParams) -> Extremum:
    nodes = numerics.xi_grid
    values = sign * symbol_on_grid(sym, nodes)
    step = 2 * np.pi / nodes
    peaks = np.flatnonzero((values >= np.roll(values, 1)) & (values >= np.roll(values, -1)))
    if len(peaks) == 0:
        peaks = np.array([int(np.argmax(values))])
    peaks = peaks[np.argsort(-values[peaks], kind="stable")][:REFINED_CANDIDATES]

    candidates = []
    for index in peaks:
        xi0 = index * step
        value0 = sign * eval_symbol(sym, xi0)
        candidates.append((value0, xi0))
        result = scipy.optimize.minimize_scalar(lambda x: -sign * eval_symbol(sym, x),
                                                bounds=(xi0 - step, xi0 + step),
                                                method="bounded",
                                                options={"xatol": 1e-13})
        refined = -float(result.fun)
        if result.success and refined > value0 + 4 * np.finfo(np.float64).eps * abs(value0):
            candidates.append((refined, float(np.mod(result.x, 2 * np.pi))))

    best = max(value for value, _ in candidates)
    tolerance = TIE_TOLERANCE * abs(best)
    xi = min(x for value, x in candidates if value >= best - tolerance)
    value = eval_symbol(sym, xi)
    log.debug(f"{'sup' if sign > 0 else 'inf'} of symbol {sym.attacked_label}: f({xi})={value}")
    return Extremum(xi, value)


def symbol_supremum(sym: GramSymbol, numerics: NumericsParams = NumericsParams()) -> Extremum:
    """Global maximum of f on [0, 2 pi): dense FFT grid, then bounded Brent refinement of the best peaks."""
    return _locate(sym, 1.0, numerics)


def symbol_infimum(sym: GramSymbol, numerics: NumericsParams = NumericsParams()) -> Extremum:
    return _locate(sym, -1.0, numerics)
