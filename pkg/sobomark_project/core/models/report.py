"""
Result records: identity residuals, verification summaries and metric rows.
"""

import math
from dataclasses import dataclass, field
from typing import Dict

from core.exceptions import ParameterError


@dataclass(frozen=True)
class Residual:
    """
    Residual of an identity: |sum of terms| against the running error
    bound of the terms. An identity holds when `relative` stays below the
    configured tolerance.
    """
    absolute: float
    scale: float

    @property
    def relative(self) -> float:
        if not self.absolute:
            return 0.0
        if not self.scale:
            return math.inf
        return self.absolute / self.scale

    def __float__(self):
        return self.absolute

    @classmethod
    def between(cls, lhs, rhs) -> 'Residual':
        """Residual of lhs = rhs for two Tracked values."""
        return cls(abs(lhs.value - rhs.value), lhs.bound + rhs.bound)


@dataclass
class VerificationReport:
    """Worst relative residual per identity over a parameter grid."""
    label: str
    tolerance: float
    worst: Dict[str, float] = field(default_factory=dict)
    checked: Dict[str, int] = field(default_factory=dict)
    skipped: Dict[str, int] = field(default_factory=dict)

    def record(self, identity: str, residual: Residual) -> None:
        self.worst[identity] = max(self.worst.get(identity, 0.0), residual.relative)
        self.checked[identity] = self.checked.get(identity, 0) + 1

    def skip(self, identity: str) -> None:
        self.skipped[identity] = self.skipped.get(identity, 0) + 1

    @property
    def passed(self) -> bool:
        return all(value <= self.tolerance for value in self.worst.values())

    def failures(self) -> Dict[str, float]:
        return {name: value for name, value in self.worst.items() if value > self.tolerance}


CSV_HEADER = ('image', 'preset', 'attack', 'param', 'psnr_db', 'ber', 'authentic')


@dataclass(frozen=True)
class MetricReport:
    psnr_db: float
    mse: float
    ber: float = 0.0
    image: str = ''
    preset: str = ''
    attack: str = 'none'
    param: float = 0.0
    authentic: bool = True

    def __post_init__(self):
        if self.mse < 0:
            raise ParameterError("MetricReport.mse must be non-negative.")
        if not 0 <= self.ber <= 1:
            raise ParameterError("MetricReport.ber must lie in [0, 1].")
        if math.isfinite(self.psnr_db) != (self.mse > 0):
            raise ParameterError("MetricReport.psnr_db must be finite exactly when mse > 0.")

    def as_csv_row(self) -> list:
        psnr = 'inf' if math.isinf(self.psnr_db) else repr(self.psnr_db)
        return [self.image, self.preset, self.attack, repr(self.param), psnr,
                repr(self.ber), 'true' if self.authentic else 'false']
