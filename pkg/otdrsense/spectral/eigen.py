import numpy as np
import scipy.linalg

from ..base import get_logger
from ..base.errors import NumericalCheckError
from ..fiber import GramSymbol, toeplitz_gram
from .models import SpectrumReport
from .params import NumericsParams
from .supremum import symbol_supremum, symbol_infimum

log = get_logger(__name__)

RESIDUAL_TOLERANCE = 1e-8


def toeplitz_eigenvalues(sym: GramSymbol, n: int, numerics: NumericsParams = NumericsParams()) -> SpectrumReport:
    gram = toeplitz_gram(sym, n, numerics.dense_n_limit)
    eigenvalues, vectors = scipy.linalg.eigh(gram)
    norm = float(np.max(np.abs(eigenvalues)))
    residual = 0.0
    for i in {0, n - 1}:
        residual = max(residual, float(np.linalg.norm(gram @ vectors[:, i] - eigenvalues[i] * vectors[:, i])))
    if residual > RESIDUAL_TOLERANCE * norm + np.finfo(np.float64).tiny:
        raise NumericalCheckError(f"eigen residual {residual} exceeds {RESIDUAL_TOLERANCE} * |G_{n}| = {norm}")
    eigenvalues = np.maximum(eigenvalues, 0.0)
    log.debug(f"G_{n}: eigenvalues in [{eigenvalues[0]}, {eigenvalues[-1]}], residual {residual}")
    return SpectrumReport(n,
                          eigenvalues,
                          symbol_infimum(sym, numerics).value,
                          symbol_supremum(sym, numerics).value,
                          residual)


def top_eigenvector_input(sym: GramSymbol, n: int, energy: float, numerics: NumericsParams = NumericsParams()) -> np.ndarray:
    """Top eigenvector of G_n scaled to total energy n E."""
    gram = toeplitz_gram(sym, n, numerics.dense_n_limit)
    _, vector = scipy.linalg.eigh(gram, subset_by_index=[n - 1, n - 1])
    vector = vector[:, 0]
    if vector[np.argmax(np.abs(vector))] < 0:
        vector = -vector
    return vector * np.sqrt(n * energy)
