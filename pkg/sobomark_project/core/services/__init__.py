"""
Service Layer

Contains the use cases of the moments / watermarking core.
Services use repositories for data access (dependency injection).

Key Principles:
- Services orchestrate the numerics (embedding, attacks, sweeps, checks)
- Services are UI-agnostic (management commands are one front end)
- Services use repositories for file access (testable with mocks)
"""

from .preset_service import PresetService
from .watermark_service import Overrides, WatermarkService
from .attack_service import AttackService
from .evaluation_service import EvaluationService
from .verification_service import VerificationService

__all__ = [
    'PresetService',
    'Overrides',
    'WatermarkService',
    'AttackService',
    'EvaluationService',
    'VerificationService',
]
