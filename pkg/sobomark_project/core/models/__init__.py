"""
Domain types of the moments / watermarking core.

Plain frozen dataclasses (no database tables); enumerations use Django
TextChoices so forms and commands can offer them as choices.
"""

from .family import FamilyKind, FamilyParams, KernelSpec
from .sobolev import SobolevParams, SobolevFamily
from .basis import MomentBasis
from .watermark import (
    ChannelPolicy, ChaosKey, KeyMaterial, WatermarkPayload, QimConfig, ExtractionResult,
    fragile_signature,
)
from .attack import AttackKind, AttackSpec, ATTACK_GRID, grid_values
from .report import Residual, VerificationReport, MetricReport, CSV_HEADER
from .preset import Preset

__all__ = [
    'FamilyKind',
    'FamilyParams',
    'KernelSpec',
    'SobolevParams',
    'SobolevFamily',
    'MomentBasis',
    'ChannelPolicy',
    'ChaosKey',
    'KeyMaterial',
    'WatermarkPayload',
    'QimConfig',
    'ExtractionResult',
    'fragile_signature',
    'AttackKind',
    'AttackSpec',
    'ATTACK_GRID',
    'grid_values',
    'Residual',
    'VerificationReport',
    'MetricReport',
    'CSV_HEADER',
    'Preset',
]
