"""
Moment / watermark presets.

Business Rules:
1. Built-in presets ship read-only and cannot be shadowed by files.
2. family and gamma must agree (gamma only for Meixner).
3. qim_delta > 0, coeff_index within the block.
"""

from dataclasses import dataclass, asdict
from typing import Optional

from core.exceptions import ParameterError
from core.models.family import FamilyKind, FamilyParams
from core.models.sobolev import SobolevParams
from core.models.watermark import QimConfig


@dataclass(frozen=True)
class Preset:
    name: str
    family: str
    mu: float
    lam: float
    alpha: float
    j: int
    qim_delta: float
    coeff_index: int = 28
    gamma: Optional[float] = None
    builtin: bool = False

    def __post_init__(self):
        if not self.name or not self.name.replace('_', '').isalnum():
            raise ParameterError("Preset.name must be a non-empty identifier.")
        if self.family not in FamilyKind.values:
            raise ParameterError(f"Preset '{self.name}': unknown family '{self.family}'.")
        object.__setattr__(self, 'family', FamilyKind(self.family).value)
        # construction validates the numeric fields
        self.family_params()
        self.sobolev_params()
        self.qim_config()

    def family_params(self) -> FamilyParams:
        if self.family == FamilyKind.MEIXNER:
            return FamilyParams.meixner(self.mu, self.gamma)
        if self.gamma is not None:
            raise ParameterError(f"Preset '{self.name}': gamma is only valid for Meixner.")
        return FamilyParams(self.family, self.mu)

    def sobolev_params(self) -> SobolevParams:
        return SobolevParams(self.alpha, self.lam, self.j)

    def qim_config(self, **overrides) -> QimConfig:
        values = {'delta': self.qim_delta, 'coeff_index': self.coeff_index}
        values.update({key: value for key, value in overrides.items() if value is not None})
        return QimConfig(**values)

    def as_dict(self) -> dict:
        data = asdict(self)
        data.pop('builtin')
        if data['gamma'] is None:
            data.pop('gamma')
        return data
