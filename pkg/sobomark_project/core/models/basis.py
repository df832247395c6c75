from dataclasses import dataclass
from typing import Optional

import numpy as np

from core.exceptions import DimensionError
from core.models.sobolev import SobolevFamily


@dataclass(frozen=True, eq=False)
class MomentBasis:
    """
    N x N moment basis with matrix[x][n] = weighted Sobolev value S_n(x).

    The matrix is stored read-only; `sf` is None for bases assembled by
    hand (e.g. the identity basis used to check the transforms).
    """

    sf: Optional[SobolevFamily]
    matrix: np.ndarray

    def __post_init__(self):
        matrix = np.array(self.matrix, dtype=np.float64)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise DimensionError(
                f"MomentBasis.matrix must be square, got shape {matrix.shape}."
            )
        matrix.setflags(write=False)
        object.__setattr__(self, 'matrix', matrix)

    @property
    def size(self) -> int:
        return self.matrix.shape[0]
