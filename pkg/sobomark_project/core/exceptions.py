"""
Domain errors for moments and watermarking.

Every failure raised by the core app is a django ValidationError subclass
carrying a stable `code`, so services, forms and management commands can
handle them the same way as any other validation failure.
"""

from django.core.exceptions import ValidationError


class SobomarkError(ValidationError):
    """Base class of all core errors."""

    default_code = 'sobomark'

    def __init__(self, message, code=None, params=None):
        super().__init__(message, code=code or self.default_code, params=params)


class ParameterError(SobomarkError):
    """Family, Sobolev, key or QIM parameters out of range."""
    default_code = 'parameter'


class EvaluationError(SobomarkError):
    """A function fed to the Sobolev inner product returned a non-finite value."""
    default_code = 'evaluation'


class SingularPointError(SobomarkError):
    """Closed-form coefficient requested at a degenerate point."""
    default_code = 'singular_point'


class ConstructionError(SobomarkError):
    default_code = 'construction'


class DimensionError(SobomarkError):
    default_code = 'dimension'


class DomainError(SobomarkError):
    """Chaotic map iterate outside (0, 1)."""
    default_code = 'domain'


class DegenerateKeyError(SobomarkError):
    default_code = 'degenerate_key'


class SizeError(SobomarkError):
    """Image sides are not multiples of the block size."""
    default_code = 'size'


class CapacityError(SobomarkError):
    """Not enough blocks to carry the robust watermark."""
    default_code = 'capacity'


class ImageFormatError(SobomarkError):
    default_code = 'image_format'


class PresetNotFoundError(SobomarkError):
    default_code = 'preset_not_found'


class KeyFileError(SobomarkError):
    default_code = 'key_file'
