import typing as T

import numpy as np
import scipy.linalg

from ..base.errors import DenseLimitError, ValidationError
from .models import BackscatterResponse, GramSymbol

DEFAULT_DENSE_LIMIT = 2048


def check_dense_size(n: int, limit: int = DEFAULT_DENSE_LIMIT) -> None:
    if n < 1:
        raise ValidationError(f"matrix dimension must be at least 1, got {n}")
    if n > limit:
        raise DenseLimitError(n, limit)


class BandedLowerToeplitz:
    """
    Strictly lower triangular banded Toeplitz matrix with entry (t, t - k) = taps[k - 1]
    for 1 <= k <= band; used for A_n (baseline or attacked responses) and C_n (their difference).
    """
    def __init__(self, taps: np.ndarray, n: int, dense_limit: int = DEFAULT_DENSE_LIMIT):
        check_dense_size(n, dense_limit)
        self.taps: np.ndarray = np.asarray(taps, dtype=np.float64)
        self.n: int = n
        self.dense_limit: int = dense_limit

    @classmethod
    def from_response(cls, response: BackscatterResponse, n: int,
                      dense_limit: int = DEFAULT_DENSE_LIMIT) -> "BandedLowerToeplitz":
        return cls(response.coeffs, n, dense_limit)

    @classmethod
    def from_symbol(cls, sym: GramSymbol, n: int, dense_limit: int = DEFAULT_DENSE_LIMIT) -> "BandedLowerToeplitz":
        return cls(sym.c, n, dense_limit)

    @property
    def band(self) -> int:
        return len(self.taps)

    def column(self, rows: int) -> np.ndarray:
        col = np.zeros(rows, dtype=np.float64)
        width = min(self.band, rows - 1)
        col[1:width + 1] = self.taps[:width]
        return col

    def dense(self, full_tail: bool = False) -> np.ndarray:
        """
        Square n x n rendering, or with full_tail the (n + band) x n convolution matrix that also
        keeps the return samples arriving after the last input pulse.
        """
        rows = self.n + self.band if full_tail else self.n
        return scipy.linalg.toeplitz(self.column(rows), np.zeros(self.n))

    def apply(self, alpha: np.ndarray, full_tail: bool = False) -> np.ndarray:
        alpha = np.asarray(alpha)
        out = np.convolve(alpha, np.concatenate([[0.0], self.taps]))
        rows = len(alpha) + self.band if full_tail else len(alpha)
        return out[:rows]


def toeplitz_gram(sym: GramSymbol, n: int, dense_limit: int = DEFAULT_DENSE_LIMIT) -> np.ndarray:
    """Dense Hermitian Toeplitz G_n built from g_0..g_{2L-1}; entries beyond the band are zero."""
    check_dense_size(n, dense_limit)
    col = np.zeros(n, dtype=np.float64)
    width = min(len(sym.g), n)
    col[:width] = sym.g[:width]
    return scipy.linalg.toeplitz(col)


def exact_gram(sym: GramSymbol, n: int, dense_limit: int = DEFAULT_DENSE_LIMIT) -> np.ndarray:
    """C_n^T C_n of the square return matrix; equals G_n except in the trailing band corner."""
    c = BandedLowerToeplitz.from_symbol(sym, n, dense_limit).dense()
    return c.T @ c


def dense_matrix(source: T.Union[BackscatterResponse, GramSymbol], n: int,
                 dense_limit: int = DEFAULT_DENSE_LIMIT) -> T.Union[BandedLowerToeplitz, np.ndarray]:
    """A response renders as its banded lower Toeplitz matrix; a symbol renders as the dense G_n."""
    if isinstance(source, BackscatterResponse):
        return BandedLowerToeplitz.from_response(source, n, dense_limit)
    if isinstance(source, GramSymbol):
        return toeplitz_gram(source, n, dense_limit)
    raise ValidationError(f"cannot render {type(source).__name__} as a matrix")


def quadratic_form(sym: GramSymbol, alpha: np.ndarray) -> float:
    """<alpha, G_n alpha> for the Toeplitz n-section, as the energy of the full convolution with c."""
    alpha = np.asarray(alpha)
    if len(alpha) == 0:
        return 0.0
    out = np.convolve(alpha, sym.delay_indexed())
    return float(np.sum(np.abs(out) ** 2))
