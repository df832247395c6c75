"""
Repository Layer

Handles all file access: images and watermarks, key files and presets.
Services depend on repositories, never on the file system directly.
This allows for:
- Easier testing (in-memory Mock repositories)
- Better separation of concerns
"""

from .image_repository import ImageRepository
from .key_repository import KeyRepository
from .preset_repository import PresetRepository

__all__ = [
    'ImageRepository',
    'KeyRepository',
    'PresetRepository',
]
