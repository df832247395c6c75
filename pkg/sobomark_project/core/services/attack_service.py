"""
Attack Service

Applies the robustness attacks to images in memory or on disk.

Business Rules:
1. Unknown attack names and invalid parameters are rejected before any
   file is read.
2. The same (attack, parameter, seed) always writes the same bytes.
"""

import logging
from typing import Iterator

import numpy as np

from core.models.attack import AttackKind, AttackSpec, grid_values
from core.numerics.attacks import apply_attack
from core.repositories.image_repository import ImageRepository

logger = logging.getLogger(__name__)


class AttackService:
    """Service class for attack simulation"""

    def __init__(self, image_repository=None):
        self.image_repository = image_repository or ImageRepository()

    def attack(self, image: np.ndarray, kind: str, param: float, seed: int = 0) -> np.ndarray:
        return apply_attack(image, AttackSpec(kind, param, seed))

    def attack_file(self, image_path, kind: str, param: float, seed: int, out_path) -> AttackSpec:
        spec = AttackSpec(kind, param, seed)
        image = self.image_repository.load(image_path)
        self.image_repository.save(out_path, apply_attack(image, spec))
        logger.info("Applied %s(%g, seed=%d) to %s -> %s", kind, param, seed, image_path, out_path)
        return spec

    def grid(self, seed: int = 0) -> Iterator[AttackSpec]:
        """Every (attack, parameter) pair of the evaluation grid, in grid order."""
        for kind in AttackKind:
            for param in grid_values(kind):
                yield AttackSpec(kind.value, param, seed)
