"""
Attack specifications and the robustness parameter grid.

Business Rules:
1. kind is one of the six supported attacks (CLI spelling: lowercase, hyphenated).
2. param is finite; values off the grid range are allowed but logged.
3. rng_seed is recorded for every spec so stochastic attacks replay exactly.
"""

import math
from dataclasses import dataclass

from django.db import models

from core.exceptions import ParameterError


class AttackKind(models.TextChoices):
    CROPPING = 'cropping', 'Cropping'
    FOURIER_ELLIPSOID = 'fourier-ellipsoid', 'Fourier ellipsoid filter'
    GAUSSIAN = 'gaussian', 'Gaussian filter'
    GAUSSIAN_LAPLACE = 'gaussian-laplace', 'Gaussian Laplace filter'
    MINIMUM_FILTER = 'minimum-filter', 'Minimum filter'
    SALT_PEPPER = 'salt-pepper', 'Salt & pepper noise'


# Parameter grid per attack: image percentage, box size, sigma, sigma,
# kernel size, density. Keyed by the plain string value.
ATTACK_GRID = {
    AttackKind.CROPPING.value: (5, 10, 15, 20, 25, 30, 35, 40),
    AttackKind.FOURIER_ELLIPSOID.value: (1, 2, 3, 4, 5, 6, 7, 8),
    AttackKind.GAUSSIAN.value: (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8),
    AttackKind.GAUSSIAN_LAPLACE.value: (0.01, 0.02, 0.03, 0.04, 0.05, 0.06, 0.07, 0.08),
    AttackKind.MINIMUM_FILTER.value: (1, 2, 3, 4, 5, 6, 7, 8),
    AttackKind.SALT_PEPPER.value: (0.01, 0.02, 0.03, 0.04, 0.05, 0.06, 0.07, 0.08),
}


@dataclass(frozen=True)
class AttackSpec:
    kind: str
    param: float
    rng_seed: int = 0

    def __post_init__(self):
        if self.kind not in AttackKind.values:
            raise ParameterError(
                f"AttackSpec.kind '{self.kind}' is unknown; available: {', '.join(AttackKind.values)}."
            )
        object.__setattr__(self, 'kind', AttackKind(self.kind).value)
        if not math.isfinite(self.param) or self.param < 0:
            raise ParameterError("AttackSpec.param must be a non-negative finite number.")

    def in_grid_range(self) -> bool:
        grid = grid_values(self.kind)
        return min(grid) <= self.param <= max(grid)


def grid_values(kind) -> tuple:
    """Grid parameters of an attack, given as AttackKind or its string value."""
    return ATTACK_GRID[AttackKind(kind).value]
