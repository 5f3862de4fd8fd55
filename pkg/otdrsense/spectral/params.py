import typing as T
from dataclasses import dataclass

from ..base.errors import ValidationError


@dataclass(frozen=True)
class NumericsParams:
    xi_grid: int = 2 ** 16
    quadrature_nodes: int = 4096
    dense_n_limit: int = 2048
    n_list: T.Tuple[int, ...] = (50, 100, 200, 400)
    lambda_points: int = 101

    def __post_init__(self):
        object.__setattr__(self, "n_list", tuple(int(n) for n in self.n_list))
        if self.xi_grid < 16:
            raise ValidationError("xi_grid must be at least 16")
        if self.quadrature_nodes < 64:
            raise ValidationError("quadrature_nodes must be at least 64")
        if self.dense_n_limit < 1:
            raise ValidationError("dense_n_limit must be positive")
        if len(self.n_list) == 0 or any(n < 1 for n in self.n_list):
            raise ValidationError("n_list must hold positive dimensions")
        if self.lambda_points < 2:
            raise ValidationError("lambda_points must be at least 2")
