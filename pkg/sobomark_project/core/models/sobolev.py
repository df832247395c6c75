"""
Sobolev-type inner product parameters and the cached Sobolev family.

Business Rules:
1. alpha < 0, so the point-mass support {alpha, ..., alpha + j} stays off
   the weight support {0, 1, 2, ...}.
2. lam > 0 and j is a non-negative integer.
3. A SobolevFamily is a pure memo of (fam, sob): every cached table can be
   rebuilt from those two values alone.
"""

from dataclasses import dataclass, replace
from typing import Tuple

import mpmath

from core.exceptions import ParameterError
from core.models.family import FamilyParams
from core.numerics import arith


@dataclass(frozen=True)
class SobolevParams:
    alpha: float
    lam: float
    j: int

    def __post_init__(self):
        if not arith.isfinite(self.alpha) or self.alpha >= 0:
            raise ParameterError("SobolevParams.alpha must be negative.")
        if not arith.isfinite(self.lam) or self.lam <= 0:
            raise ParameterError("SobolevParams.lam must be positive.")
        if isinstance(self.j, bool) or not isinstance(self.j, int) or self.j < 0:
            raise ParameterError("SobolevParams.j must be a non-negative integer.")

    def to_mp(self) -> 'SobolevParams':
        return replace(self, alpha=mpmath.mpf(self.alpha), lam=mpmath.mpf(self.lam))

    def to_float(self) -> 'SobolevParams':
        return replace(self, alpha=float(self.alpha), lam=float(self.lam))

    def is_degenerate(self, x) -> bool:
        """True when x is one of alpha, alpha + 1, ..., alpha + j."""
        offset = float(x) - float(self.alpha)
        return offset == int(offset) and 0 <= offset <= self.j


@dataclass(frozen=True)
class SobolevFamily:
    """
    Classical family plus Sobolev parameters with their tables cached.

    Tables are indexed by degree m = 0..n_max + 1 (one degree of headroom
    for the recurrence, which reaches S_{n+1}):

    - alpha_differences[m][k] = Delta^k P_m(alpha), k = 0..j
    - squared_norms[m] = ||P_m||^2
    - kernel_diagonal[m] = K_{m-1}^{(j,j)}(alpha, alpha), zero for m = 0
    - corrections[m] = lam Delta^j P_m(alpha) / (1 + lam K_{m-1}^{(j,j)}(alpha, alpha)),
      zero for m = 0
    """

    fam: FamilyParams
    sob: SobolevParams
    n_max: int
    alpha_differences: Tuple[Tuple[float, ...], ...]
    squared_norms: Tuple[float, ...]
    kernel_diagonal: Tuple[float, ...]
    corrections: Tuple[float, ...]

    @property
    def is_mp(self) -> bool:
        return arith.is_mp(self.fam.mu)

    def check_degree(self, n: int) -> None:
        if n < 0 or n > self.n_max + 1:
            raise ParameterError(
                f"SobolevFamily degree {n} is outside the cached range 0..{self.n_max + 1}."
            )

    def __str__(self):
        return f'Sobolev({self.fam}, alpha={float(self.sob.alpha)!r}, lam={float(self.sob.lam)!r}, j={self.sob.j})'
