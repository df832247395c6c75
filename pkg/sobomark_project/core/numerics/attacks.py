"""
Attack simulators for robustness evaluation.

Business Rules:
1. Every attack maps a byte image to a byte image of the same shape;
   channels are attacked independently.
2. Parameters off the evaluation grid are applied anyway, with a warning.
3. Stochastic attacks draw from numpy's default_rng seeded with
   AttackSpec.rng_seed, so the same spec always gives the same bytes.
4. Gaussian kernels are truncated at 4 sigma with reflective boundaries.
"""

import logging
import math

import numpy as np
from scipy import ndimage

from core.exceptions import ImageFormatError, ParameterError
from core.models.attack import AttackKind, AttackSpec
from core.numerics.watermarkcore import finalize_pixels

logger = logging.getLogger(__name__)

TRUNCATE = 4.0
BOUNDARY = 'reflect'


def _check_image(image) -> np.ndarray:
    image = np.asarray(image)
    if image.ndim not in (2, 3) or image.size == 0:
        raise ImageFormatError(f"Attacks need a non-empty H x W or H x W x C image, got shape {image.shape}.")
    if not np.issubdtype(image.dtype, np.number):
        raise ImageFormatError(f"Attacks need numeric pixels, got dtype {image.dtype}.")
    return image


def _per_channel(image: np.ndarray, transform) -> np.ndarray:
    work = image.astype(np.float64)
    if work.ndim == 2:
        return transform(work)
    return np.stack([transform(work[..., c]) for c in range(work.shape[2])], axis=-1)


def crop(image: np.ndarray, percent: float) -> np.ndarray:
    """Black out a top-left rectangle covering `percent` of the area."""
    if percent > 100:
        raise ParameterError("Cropping percentage must not exceed 100.")
    fraction = math.sqrt(percent / 100)
    height, width = image.shape[:2]
    rows, cols = math.floor(height * fraction + 0.5), math.floor(width * fraction + 0.5)
    attacked = image.copy()
    attacked[:rows, :cols] = 0
    return attacked


def fourier_ellipsoid(image: np.ndarray, size: float) -> np.ndarray:
    def transform(channel):
        spectrum = ndimage.fourier_ellipsoid(np.fft.fft2(channel), size=size)
        return np.fft.ifft2(spectrum).real
    return _per_channel(image, transform)


def gaussian(image: np.ndarray, sigma: float) -> np.ndarray:
    return _per_channel(image, lambda channel: ndimage.gaussian_filter(
        channel, sigma=sigma, mode=BOUNDARY, truncate=TRUNCATE))


def gaussian_laplace(image: np.ndarray, sigma: float) -> np.ndarray:
    """Image plus the discrete Laplacian of its sigma-smoothed copy."""
    def transform(channel):
        smoothed = ndimage.gaussian_filter(channel, sigma=sigma, mode=BOUNDARY, truncate=TRUNCATE)
        return channel + ndimage.laplace(smoothed, mode=BOUNDARY)
    return _per_channel(image, transform)


def minimum(image: np.ndarray, size: float) -> np.ndarray:
    window = int(round(size))
    if window < 1:
        raise ParameterError("Minimum filter size must be at least 1.")
    return _per_channel(image, lambda channel: ndimage.minimum_filter(channel, size=window, mode=BOUNDARY))


def salt_pepper(image: np.ndarray, density: float, seed: int) -> np.ndarray:
    """Set round(density * H * W) distinct pixels to 0 or 255 in every channel."""
    if density > 1:
        raise ParameterError("Salt & pepper density must not exceed 1.")
    height, width = image.shape[:2]
    count = int(round(density * height * width))
    rng = np.random.default_rng(seed)
    positions = rng.choice(height * width, size=count, replace=False)
    values = rng.integers(0, 2, size=count) * 255
    attacked = image.copy()
    flat = attacked.reshape(height * width, -1)
    flat[positions] = values[:, np.newaxis]
    return flat.reshape(image.shape)


def apply_attack(image, spec: AttackSpec) -> np.ndarray:
    """
    Apply one attack and return a byte image of the input's shape.

    Raises:
        ImageFormatError: the input is not an image array
        ParameterError: the parameter is outside the attack's domain
    """
    image = _check_image(image)
    if not spec.in_grid_range():
        logger.warning("Attack %s parameter %g lies outside the evaluation grid", spec.kind, spec.param)
    kind = AttackKind(spec.kind)
    if kind == AttackKind.CROPPING:
        attacked = crop(image, spec.param)
    elif kind == AttackKind.FOURIER_ELLIPSOID:
        attacked = fourier_ellipsoid(image, spec.param)
    elif kind == AttackKind.GAUSSIAN:
        attacked = gaussian(image, spec.param)
    elif kind == AttackKind.GAUSSIAN_LAPLACE:
        attacked = gaussian_laplace(image, spec.param)
    elif kind == AttackKind.MINIMUM_FILTER:
        attacked = minimum(image, spec.param)
    else:
        attacked = salt_pepper(image, spec.param, spec.rng_seed)
    return finalize_pixels(attacked)
